#include "gkpack/shelf.hpp"

#include <algorithm>

namespace gk {

NfdhResult nfdh_pack(const std::vector<Item>& items, long long box_w, long long box_h) {
  for (const auto& it : items)
    if (it.w > box_w || it.h > box_h)
      throw std::invalid_argument("nfdh_pack: item " + std::to_string(it.id) +
                                  " does not fit the box");

  std::vector<Item> order = items;
  std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });

  NfdhResult res;
  res.packing.region = {0, 0, box_w, box_h};

  long long shelf_y = 0;       // baseline of the current shelf
  long long shelf_h = 0;       // height of the current shelf (its first item)
  long long cursor_x = 0;
  bool open = false;
  for (size_t i = 0; i < order.size(); ++i) {
    const Item& it = order[i];
    if (open && cursor_x + it.w <= box_w) {
      res.packing.placements.push_back({it.id, cursor_x, shelf_y, false});
      cursor_x += it.w;
      continue;
    }
    // Open the next shelf on top of the current one.
    long long next_y = open ? shelf_y + shelf_h : 0;
    if (next_y + it.h > box_h) {
      res.leftover.assign(order.begin() + i, order.end());
      break;
    }
    shelf_y = next_y;
    shelf_h = it.h;
    cursor_x = 0;
    open = true;
    res.packing.placements.push_back({it.id, cursor_x, shelf_y, false});
    cursor_x += it.w;
  }
  res.packing.canonicalize();
  return res;
}

}  // namespace gk
