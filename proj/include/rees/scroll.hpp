#pragma once

// Scroll matrices.  X is the block-concatenated catalecticant matrix; M is the
// same set of columns rearranged round-robin over the blocks, with the last
// column of every block moved to the end in decreasing block order.  Column
// indices are 1-based, x-variable row indices j are 0-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rees/errors.hpp"

namespace rees {

/// x_{i,j}: block i in [1,d], row j in [0,n_i].
struct XIndex {
  int block = 0;
  int row = 0;
  friend auto operator<=>(const XIndex&, const XIndex&) = default;
};

inline std::string x_name(XIndex x) {
  return "x[" + std::to_string(x.block) + "," + std::to_string(x.row) + "]";
}

class ScrollSpec {
 public:
  ScrollSpec() = default;

  const std::vector<int>& degrees() const noexcept { return n_; }
  int n(int block) const { return n_.at(static_cast<std::size_t>(block - 1)); }
  int d() const noexcept { return static_cast<int>(n_.size()); }
  int c() const noexcept { return c_; }
  bool grassmann() const noexcept { return c_ < d() + 4; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < n_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(n_[i]);
    }
    return s;
  }

  friend bool operator==(const ScrollSpec&, const ScrollSpec&) = default;

 private:
  friend ScrollSpec make_spec(std::vector<int> degrees);
  std::vector<int> n_;
  int c_ = 0;
};

/// Canonicalizes by sorting; the scroll only depends on the multiset.
inline ScrollSpec make_spec(std::vector<int> degrees) {
  if (degrees.empty()) throw Error(Errc::InvalidPartition, "empty partition");
  for (int v : degrees)
    if (v < 1) throw Error(Errc::InvalidPartition, "block degree " + std::to_string(v) + " is not positive");
  std::sort(degrees.begin(), degrees.end());
  ScrollSpec s;
  s.c_ = std::accumulate(degrees.begin(), degrees.end(), 0);
  s.n_ = std::move(degrees);
  return s;
}

/// "1,2,2,3" -> (1,2,2,3).  Whitespace around entries is tolerated.
inline ScrollSpec parse_partition(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::InvalidPartition, "empty entry in '" + std::string(text) + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(Errc::InvalidPartition, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw Error(Errc::InvalidPartition, "trailing comma");
  return make_spec(std::move(out));
}

/// Every partition (as a sorted spec) with 1 <= c <= max_c, ordered by c then
/// lexicographically.
inline std::vector<ScrollSpec> partitions_up_to(int max_c) {
  std::vector<ScrollSpec> out;
  std::vector<int> parts;
  // parts are generated nondecreasing
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(make_spec(parts));
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  for (int c = 1; c <= max_c; ++c) rec(rec, c, 1);
  return out;
}

struct MatrixColumn {
  XIndex top;
  XIndex bottom;
  friend bool operator==(const MatrixColumn&, const MatrixColumn&) = default;
};

inline MatrixColumn column_at(int block, int row) { return {{block, row}, {block, row + 1}}; }

struct MatrixM {
  std::vector<MatrixColumn> cols;
  const MatrixColumn& operator[](int alpha) const { return cols.at(static_cast<std::size_t>(alpha - 1)); }
  int size() const noexcept { return static_cast<int>(cols.size()); }
};

struct MatrixX {
  std::vector<MatrixColumn> cols;
  const MatrixColumn& operator[](int alpha) const { return cols.at(static_cast<std::size_t>(alpha - 1)); }
  int size() const noexcept { return static_cast<int>(cols.size()); }
};

inline MatrixM build_matrix_M(const ScrollSpec& spec) {
  MatrixM m;
  m.cols.reserve(static_cast<std::size_t>(spec.c()));
  const int max_n = spec.degrees().back();
  for (int j = 0; j + 2 <= max_n; ++j)
    for (int i = 1; i <= spec.d(); ++i)
      if (spec.n(i) >= j + 2) m.cols.push_back(column_at(i, j));
  for (int i = spec.d(); i >= 1; --i) m.cols.push_back(column_at(i, spec.n(i) - 1));
  return m;
}

inline MatrixX build_matrix_X(const ScrollSpec& spec) {
  MatrixX x;
  x.cols.reserve(static_cast<std::size_t>(spec.c()));
  for (int i = 1; i <= spec.d(); ++i)
    for (int j = 0; j < spec.n(i); ++j) x.cols.push_back(column_at(i, j));
  return x;
}

/// X column alpha sits at M column forward(alpha).  Both directions 1-based.
class Tau {
 public:
  Tau() = default;
  explicit Tau(std::vector<int> forward) : fwd_(std::move(forward)), inv_(fwd_.size()) {
    for (std::size_t a = 0; a < fwd_.size(); ++a) inv_.at(static_cast<std::size_t>(fwd_[a] - 1)) = static_cast<int>(a) + 1;
  }
  int forward(int alpha) const { return fwd_.at(static_cast<std::size_t>(alpha - 1)); }
  int inverse(int alpha) const { return inv_.at(static_cast<std::size_t>(alpha - 1)); }
  const std::vector<int>& forward_table() const noexcept { return fwd_; }
  const std::vector<int>& inverse_table() const noexcept { return inv_; }
  int size() const noexcept { return static_cast<int>(fwd_.size()); }

 private:
  std::vector<int> fwd_;
  std::vector<int> inv_;
};

inline Tau tau(const ScrollSpec& spec) {
  const MatrixM m = build_matrix_M(spec);
  const MatrixX x = build_matrix_X(spec);
  std::vector<int> fwd(static_cast<std::size_t>(spec.c()), 0);
  for (int a = 1; a <= spec.c(); ++a)
    for (int b = 1; b <= spec.c(); ++b)
      if (m[b] == x[a]) fwd[static_cast<std::size_t>(a - 1)] = b;
  return Tau(std::move(fwd));
}

/// The next M column drawn from the same block: the column whose top entry is
/// the bottom entry of column alpha.  Defined for alpha <= c-d.
inline int bar(const MatrixM& m, int c_minus_d, int alpha) {
  if (alpha < 1 || alpha > c_minus_d)
    throw Error(Errc::BarUndefined, "bar(" + std::to_string(alpha) + ") needs 1 <= alpha <= " + std::to_string(c_minus_d));
  const XIndex want = m[alpha].bottom;
  for (int b = 1; b <= m.size(); ++b)
    if (m[b].top == want) return b;
  throw Error(Errc::BarUndefined, "no column continues column " + std::to_string(alpha));
}

inline int bar(const ScrollSpec& spec, int alpha) { return bar(build_matrix_M(spec), spec.c() - spec.d(), alpha); }

/// tau(tau^-1(alpha)+1); kept separate so the two characterizations can be
/// compared.
inline int bar_via_tau(const ScrollSpec& spec, const Tau& t, int alpha) {
  if (alpha < 1 || alpha > spec.c() - spec.d())
    throw Error(Errc::BarUndefined, "bar(" + std::to_string(alpha) + ") is undefined");
  return t.forward(t.inverse(alpha) + 1);
}

struct GammaEll {
  std::vector<int> gamma;  // gamma[i-1] = gamma_{alpha,i}
  int ell = 0;
};

/// gamma_{alpha,i} is the first M column at or after alpha+2 drawn from block
/// i; ell is read off the length of the run {alpha+2, ..., alpha+ell}.
inline GammaEll gamma_and_ell(const ScrollSpec& spec, const MatrixM& m, int alpha) {
  const int c = spec.c(), d = spec.d();
  if (alpha < 1 || alpha > c - d - 2)
    throw Error(Errc::IndexOutOfRange, "alpha=" + std::to_string(alpha) + " outside [1," + std::to_string(c - d - 2) + "]");
  GammaEll out;
  out.gamma.assign(static_cast<std::size_t>(d), 0);
  for (int i = 1; i <= d; ++i) {
    for (int g = alpha + 2; g <= c; ++g)
      if (m[g].top.block == i) {
        out.gamma[static_cast<std::size_t>(i - 1)] = g;
        break;
      }
  }
  std::vector<int> sorted = out.gamma;
  std::sort(sorted.begin(), sorted.end());
  int run = 0;
  while (run < d && sorted[static_cast<std::size_t>(run)] == alpha + 2 + run) ++run;
  out.ell = run + 1;
  return out;
}

inline GammaEll gamma_and_ell(const ScrollSpec& spec, int alpha) {
  return gamma_and_ell(spec, build_matrix_M(spec), alpha);
}

namespace detail {

inline std::string render_two_rows(const std::vector<MatrixColumn>& cols, const std::vector<std::size_t>& pipes_before) {
  std::string top, bottom;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) {
      const bool pipe = std::find(pipes_before.begin(), pipes_before.end(), k) != pipes_before.end();
      top += pipe ? " | " : " ";
      bottom += pipe ? " | " : " ";
    }
    std::string t = x_name(cols[k].top), b = x_name(cols[k].bottom);
    const std::size_t w = std::max(t.size(), b.size());
    t.resize(w, ' ');
    b.resize(w, ' ');
    top += t;
    bottom += b;
  }
  auto rtrim = [](std::string& s) { s.erase(s.find_last_not_of(' ') + 1); };
  rtrim(top);
  rtrim(bottom);
  return top + "\n" + bottom + "\n";
}

}  // namespace detail

/// Two rows of entries; pipes mark the catalecticant block boundaries.
inline std::string dump_text(const ScrollSpec& spec, const MatrixX& x) {
  std::vector<std::size_t> pipes;
  std::size_t at = 0;
  for (int i = 1; i < spec.d(); ++i) {
    at += static_cast<std::size_t>(spec.n(i));
    pipes.push_back(at);
  }
  return detail::render_two_rows(x.cols, pipes);
}

/// Two rows of entries; a pipe separates the round-robin columns from the
/// trailing d block-terminal columns.
inline std::string dump_text(const ScrollSpec& spec, const MatrixM& m) {
  std::vector<std::size_t> pipes;
  if (spec.c() > spec.d()) pipes.push_back(static_cast<std::size_t>(spec.c() - spec.d()));
  return detail::render_two_rows(m.cols, pipes);
}

}  // namespace rees
