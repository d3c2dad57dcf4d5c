#pragma once

#include <cstdint>
#include <vector>

#include "relink/error.hpp"

#if defined(RELINK_HAVE_OPENMP)
#include <omp.h>
#endif

namespace relink {

// Shared tensor-contraction engine. A State is the linear map from the fixed
// bottom boundary space into the space of the current boundary object, stored
// densely with row-major multi-indices (leftmost strand most significant).
// Quantum words run it over TruncatedSeries, classical chord words over
// RatFunc; every tile used by either side is an even map, so no parity
// bookkeeping happens here. Kernels are gather loops, parallel over output
// entries when enabled.

bool engine_parallel();
void set_engine_parallel(bool on);

template <class K>
struct EngineState {
  std::vector<int> dims;  // per-slot dimension of the current object
  int64_t bottom_dim = 1;
  std::vector<K> a;  // size prod(dims) * bottom_dim, row-major

  int64_t space_dim() const {
    int64_t d = 1;
    for (int x : dims) d *= x;
    return d;
  }
};

// Identity map on the space with the given slot dimensions.
template <class K>
EngineState<K> engine_identity(const std::vector<int>& dims, const K& one) {
  EngineState<K> st;
  st.dims = dims;
  st.bottom_dim = st.space_dim();
  st.a.assign(st.bottom_dim * st.bottom_dim, K{});
  for (int64_t i = 0; i < st.bottom_dim; ++i) st.a[i * st.bottom_dim + i] = one;
  return st;
}

// Replaces the in_count slots starting at pos by slots with dimensions
// out_dims, applying the local matrix m (row-major blocks: m[out][in] at
// index out * in_dim + in). Handles crossings (2 in, 2 out), cups (0 in),
// caps (2 in, 0 out) and single-slot operators uniformly.
template <class K>
void engine_apply(EngineState<K>& st, int pos, int in_count,
                  const std::vector<int>& out_dims, const std::vector<K>& m) {
  const int n = static_cast<int>(st.dims.size());
  if (pos < 0 || pos + in_count > n)
    throw internal_error("engine_apply: position out of range");

  int64_t left_dim = 1, in_dim = 1, right_dim = 1, out_dim = 1;
  for (int i = 0; i < pos; ++i) left_dim *= st.dims[i];
  for (int i = pos; i < pos + in_count; ++i) in_dim *= st.dims[i];
  for (int i = pos + in_count; i < n; ++i) right_dim *= st.dims[i];
  for (int d : out_dims) out_dim *= d;
  if (static_cast<int64_t>(m.size()) != out_dim * in_dim)
    throw internal_error("engine_apply: matrix shape mismatch");

  const int64_t cols = st.bottom_dim;
  std::vector<K> out(left_dim * out_dim * right_dim * cols, K{});
  const int64_t total = left_dim * out_dim * right_dim * cols;
  const int64_t in_stride = right_dim * cols;

#if defined(RELINK_HAVE_OPENMP)
#pragma omp parallel for schedule(static) if (engine_parallel())
#endif
  for (int64_t idx = 0; idx < total; ++idx) {
    int64_t rest = idx;
    const int64_t c = rest % cols;
    rest /= cols;
    const int64_t r = rest % right_dim;
    rest /= right_dim;
    const int64_t o = rest % out_dim;
    const int64_t l = rest / out_dim;
    K acc{};
    const int64_t base = (l * in_dim * right_dim + r) * cols + c;
    for (int64_t i = 0; i < in_dim; ++i) {
      const K& coef = m[o * in_dim + i];
      if (coef.is_zero()) continue;
      acc = acc + coef * st.a[base + i * in_stride];
    }
    out[idx] = acc;
  }

  st.a = std::move(out);
  std::vector<int> dims;
  dims.reserve(n - in_count + out_dims.size());
  dims.insert(dims.end(), st.dims.begin(), st.dims.begin() + pos);
  dims.insert(dims.end(), out_dims.begin(), out_dims.end());
  dims.insert(dims.end(), st.dims.begin() + pos + in_count, st.dims.end());
  st.dims = std::move(dims);
}

}  // namespace relink
