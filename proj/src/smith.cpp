#include "gralab/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace gralab {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("smith: ") + msg);
}

}  // namespace

IntMat hermite_basis(IntMat rows, size_t s) {
  size_t r = 0;
  for (size_t col = 0; col < s; ++col) {
    // Euclidean elimination: leave a single nonzero entry in this column at
    // row r, zero below it.
    while (true) {
      size_t piv = size_t(-1);
      long long best = 0;
      for (size_t i = r; i < rows.size(); ++i) {
        long long v = std::llabs(rows[i][col]);
        if (v != 0 && (piv == size_t(-1) || v < best)) {
          piv = i;
          best = v;
        }
      }
      if (piv == size_t(-1)) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        long long q = rows[i][col] / rows[r][col];
        for (size_t j = 0; j < s; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows.size() && rows[r][col] != 0) {
      if (rows[r][col] < 0)
        for (size_t j = 0; j < s; ++j) rows[r][j] = -rows[r][j];
      ++r;
    }
  }
  check(r == s, "input lattice does not have full rank");
  rows.resize(s);
  return rows;
}

SmithResult smith_normal_form(IntMat c, size_t s) {
  size_t m = c.size();
  IntMat v_inv(s, std::vector<long long>(s, 0));
  for (size_t i = 0; i < s; ++i) v_inv[i][i] = 1;

  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < m; ++i) std::swap(c[i][a], c[i][b]);
    std::swap(v_inv[a], v_inv[b]);
  };
  // C <- C * E with E = I + q*e_{src,dst};  V^{-1} <- E^{-1} * V^{-1}.
  auto col_addmul = [&](size_t dst, size_t src, long long q) {
    for (size_t i = 0; i < m; ++i) c[i][dst] += q * c[i][src];
    for (size_t j = 0; j < s; ++j) v_inv[src][j] -= q * v_inv[dst][j];
  };
  auto col_negate = [&](size_t a) {
    for (size_t i = 0; i < m; ++i) c[i][a] = -c[i][a];
    for (size_t j = 0; j < s; ++j) v_inv[a][j] = -v_inv[a][j];
  };

  for (size_t t = 0; t < s; ++t) {
    while (true) {
      size_t pi = size_t(-1), pj = 0;
      long long best = 0;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < s; ++j) {
          long long v = std::llabs(c[i][j]);
          if (v != 0 && (pi == size_t(-1) || v < best)) {
            pi = i;
            pj = j;
            best = v;
          }
        }
      check(pi != size_t(-1), "column rank deficiency");
      std::swap(c[t], c[pi]);
      if (pj != t) col_swap(t, pj);
      if (c[t][t] < 0) col_negate(t);

      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (c[i][t] == 0) continue;
        long long q = c[i][t] / c[t][t];
        for (size_t j = t; j < s; ++j) c[i][j] -= q * c[t][j];
        if (c[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < s; ++j) {
        if (c[t][j] == 0) continue;
        long long q = c[t][j] / c[t][t];
        col_addmul(j, t, -q);
        if (c[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }

  // Enforce the divisibility chain d_t | d_{t+1}.
  for (size_t t = 0; t + 1 < s; ++t) {
    for (size_t u = t + 1; u < s; ++u) {
      if (c[u][u] % c[t][t] == 0) continue;
      // Fold column u into column t and re-diagonalize the 2x2 block.
      col_addmul(t, u, 1);
      while (true) {
        if (c[u][t] == 0 && c[t][u] == 0 && c[t][t] != 0 &&
            c[u][u] % c[t][t] == 0)
          break;
        // Row step.
        if (c[u][t] != 0) {
          if (std::llabs(c[u][t]) < std::llabs(c[t][t]) || c[t][t] == 0)
            std::swap(c[t], c[u]);
          if (c[u][t] != 0) {
            long long q = c[u][t] / c[t][t];
            for (size_t j = 0; j < s; ++j) c[u][j] -= q * c[t][j];
          }
          continue;
        }
        // Column step.
        if (c[t][u] != 0) {
          if (std::llabs(c[t][u]) < std::llabs(c[t][t])) col_swap(t, u);
          if (c[t][u] != 0) {
            long long q = c[t][u] / c[t][t];
            col_addmul(u, t, -q);
          }
          continue;
        }
        break;
      }
      if (c[t][t] < 0) col_negate(t);
      if (c[u][u] < 0) col_negate(u);
    }
  }

  SmithResult out;
  out.diag.resize(s);
  for (size_t t = 0; t < s; ++t) {
    check(c[t][t] > 0, "nonpositive invariant factor");
    out.diag[t] = c[t][t];
    if (t + 1 < s) check(c[t + 1][t + 1] % c[t][t] == 0, "divisibility chain");
  }
  out.v_inv = std::move(v_inv);
  return out;
}

CyclicDecomposition cyclic_decomposition(
    const std::vector<uint32_t>& ambient_orders,
    const std::vector<std::vector<uint32_t>>& gens,
    const std::vector<std::vector<uint32_t>>& rels) {
  size_t s = ambient_orders.size();
  CyclicDecomposition out;
  if (s == 0) return out;

  auto with_order_rows = [&](const std::vector<std::vector<uint32_t>>& vs) {
    IntMat rows;
    for (const auto& v : vs) {
      std::vector<long long> r(v.begin(), v.end());
      r.resize(s, 0);
      rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < s; ++i) {
      std::vector<long long> r(s, 0);
      r[i] = ambient_orders[i];
      rows.push_back(std::move(r));
    }
    return rows;
  };

  IntMat basis = hermite_basis(with_order_rows(gens), s);

  // Express the relation lattice in the generator-lattice basis.
  IntMat rel_rows = with_order_rows(rels);
  IntMat c;
  for (const auto& r : rel_rows) {
    std::vector<long long> x(s, 0);
    for (size_t col = 0; col < s; ++col) {
      long long acc = r[col];
      for (size_t i = 0; i < col; ++i) acc -= x[i] * basis[i][col];
      check(acc % basis[col][col] == 0, "relations not inside generator span");
      x[col] = acc / basis[col][col];
    }
    c.push_back(std::move(x));
  }

  SmithResult snf = smith_normal_form(std::move(c), s);

  for (size_t t = 0; t < s; ++t) {
    if (snf.diag[t] <= 1) continue;
    std::vector<uint32_t> g(s, 0);
    for (size_t col = 0; col < s; ++col) {
      long long acc = 0;
      for (size_t i = 0; i < s; ++i) acc += snf.v_inv[t][i] * basis[i][col];
      long long o = ambient_orders[col];
      acc %= o;
      if (acc < 0) acc += o;
      g[col] = uint32_t(acc);
    }
    out.orders.push_back(uint32_t(snf.diag[t]));
    out.gens.push_back(std::move(g));
  }
  return out;
}

}  // namespace gralab
