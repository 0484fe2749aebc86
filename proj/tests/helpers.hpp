#pragma once

#include "rankcode/field.hpp"

namespace testutil {

inline rankcode::FieldPtr field(std::uint32_t p, int l, int n, int s = 1, int l0 = 0, int u = 0) {
  return rankcode::FieldContext::create({p, l, n, s, l0, u, {}});
}

}  // namespace testutil
