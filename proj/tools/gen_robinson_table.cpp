// Regenerates src/robinson_table.inc from the geometric derivation.
//   gen_robinson_table > src/robinson_table.inc

#include <iostream>

#include "shiftforge/robinson.hpp"

int main() {
  const shiftforge::RobinsonSet set = shiftforge::derive_robinson_tileset(7);
  std::cout << "// Generated by tools/gen_robinson_table.cpp; do not edit.\n";
  std::cout << "// " << shiftforge::kRobinsonVersion << ": " << set.tileset.size() << " tiles, "
            << set.tileset.color_count() << " colors.\n";
  std::cout << "constexpr const char* kPinnedColors[] = {\n";
  for (const std::string& label : set.tileset.color_labels()) std::cout << "    \"" << label << "\",\n";
  std::cout << "};\n\nconstexpr PinnedTile kPinnedTiles[] = {\n";
  for (std::size_t i = 0; i < set.tileset.size(); ++i) {
    const auto& t = set.tileset[i];
    std::cout << "    {" << t.north << ", " << t.east << ", " << t.south << ", " << t.west << ", \""
              << set.tile_roles[i] << "\"},\n";
  }
  std::cout << "};\n";
}
