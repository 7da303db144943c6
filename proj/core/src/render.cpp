#include "gkpack/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gk {
namespace {

// Deterministic mid-tone color from the item id (splitmix-style hash).
std::string color_of(int id) {
  uint64_t x = static_cast<uint64_t>(id) + 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  const int r = 80 + static_cast<int>(x % 150);
  const int g = 80 + static_cast<int>((x >> 8) % 150);
  const int b = 80 + static_cast<int>((x >> 16) % 150);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const Packing& packing) {
  const RectI& rg = packing.region;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << rg.x << ' ' << rg.y << ' '
     << rg.w << ' ' << rg.h << "\">\n";
  os << "<rect x=\"" << rg.x << "\" y=\"" << rg.y << "\" width=\"" << rg.w << "\" height=\""
     << rg.h << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"0.2\"/>\n";
  os << "<g>";
  if (!packing.placements.empty()) os << '\n';
  for (const auto& pl : packing.placements) {
    const Item* it = inst.find(pl.item_id);
    if (!it) throw std::invalid_argument("render_svg: placement references unknown item");
    const RectI fp = footprint(*it, pl);
    // Flip vertically: SVG y grows downward, packings grow upward.
    const long long y_svg = 2 * rg.y + rg.h - fp.y - fp.h;
    os << "<rect x=\"" << fp.x << "\" y=\"" << y_svg << "\" width=\"" << fp.w << "\" height=\""
       << fp.h << "\" fill=\"" << color_of(pl.item_id) << "\" stroke=\"#333\""
       << " stroke-width=\"0.1\"><title>item " << pl.item_id << (pl.rotated ? " (rotated)" : "")
       << "</title></rect>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace gk
