#pragma once

#include <cstddef>
#include <string>

#include "catconv/path.hpp"

namespace catconv {

enum class DecompositionMap { chi, psi };

/// SVG 1.1 drawing of a path with its chi excursions or psi splits, one
/// stroke colour per item. For psi a second panel shows the even-zeroed image.
/// Byte-identical output for identical input.
/// Throws DomainError when `p` is outside the map's domain.
std::string render_decomposition(const Path& p, DecompositionMap map);

struct TriangleRenderOptions {
  bool omit_forbidden = false;  // otherwise forbidden nodes are drawn struck through
};

/// Node-and-label diagram of triangle(N). Throws CapExceeded past the triangle cap.
std::string render_triangle(std::size_t blocks, const TriangleRenderOptions& options = {});

}  // namespace catconv
