#include "grassmoduli/rect_decomp.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "grassmoduli/lr.hpp"

namespace grassmoduli {

namespace {

void check_pqk(int p, int q, int k) {
  if (q < 1) throw std::invalid_argument("rect_square: requires q >= 1");
  if (p < q) throw std::invalid_argument("rect_square: requires p >= q");
  if (k < 0) throw std::invalid_argument("rect_square: requires k >= 0");
}

RectSquareComponent make_component(int p, int q, int k,
                                   const std::vector<int>& i) {
  RectSquareComponent comp;
  comp.p = p;
  comp.q = q;
  comp.k = k;
  comp.i = i;
  comp.j.resize(static_cast<std::size_t>(q));
  for (int a = 0; a < q; ++a)
    comp.j[static_cast<std::size_t>(a)] =
        i[static_cast<std::size_t>(q - 1 - a)];

  // Highest weight rows: the m-th of the first q rows loses the last m of
  // the i's from 2k; the next q rows carry the suffix sums of i.
  std::vector<int> parts(static_cast<std::size_t>(2 * q), 0);
  int suffix = 0;
  for (int m = 1; m <= q; ++m) {
    suffix += i[static_cast<std::size_t>(q - m)];
    parts[static_cast<std::size_t>(m - 1)] = 2 * k - suffix;
  }
  for (int jj = 1; jj <= q; ++jj) {
    int tail = 0;
    for (int a = jj; a <= q; ++a) tail += i[static_cast<std::size_t>(a - 1)];
    parts[static_cast<std::size_t>(q + jj - 1)] = tail;
  }
  comp.partition = Partition(std::move(parts));
  comp.fund = partition_to_fund(comp.partition, p + q);
  return comp;
}

}  // namespace

std::vector<RectSquareComponent> rect_square_closed_form(int p, int q, int k) {
  check_pqk(p, q, k);
  std::vector<RectSquareComponent> out;
  std::vector<int> i(static_cast<std::size_t>(q), 0);
  std::function<void(int, int)> enumerate = [&](int pos, int used) {
    if (pos == q) {
      out.push_back(make_component(p, q, k, i));
      return;
    }
    for (int value = 0; value <= k - used; ++value) {
      i[static_cast<std::size_t>(pos)] = value;
      enumerate(pos + 1, used + value);
    }
    i[static_cast<std::size_t>(pos)] = 0;
  };
  enumerate(0, 0);
  return out;
}

BigInt rect_square_component_count(int q, int k) {
  return binomial(k + q, q);
}

LRWitnessReport verify_lr_rules_witness(int p, int q, int k) {
  check_pqk(p, q, k);
  if (q > 4 || k > 3)
    throw std::invalid_argument(
        "verify_lr_rules_witness: intended for q <= 4, k <= 3");

  LRWitnessReport report;
  report.p = p;
  report.q = q;
  report.k = k;

  const Partition rect = Partition::rectangle(q, k);
  const int n = p + q;
  std::vector<RectSquareComponent> closed = rect_square_closed_form(p, q, k);
  std::multiset<Partition> closed_support;
  for (const auto& comp : closed) closed_support.insert(comp.partition);

  SchurExpansion square = lr_product(rect, rect, n);
  std::multiset<Partition> lr_support;

  auto record = [&](const std::string& text) {
    report.violations.push_back(text);
  };

  for (const auto& [nu, coeff] : square.terms()) {
    for (BigInt copies = 0; copies < coeff; ++copies) lr_support.insert(nu);
    std::vector<LRTableau> fillings = lr_tableaux(nu, rect, rect);
    report.component_count += static_cast<long long>(fillings.size());
    for (const auto& t : fillings) {
      ++report.tableaux_checked;
      std::string where =
          "nu=" + nu.to_string() + " filling#" +
          std::to_string(report.tableaux_checked);

      // Row-q family x^q_{q+r} (zero beyond the last row) parameterizes
      // everything else.
      auto xq = [&](int r) { return t.entries_in_row(q, q + r); };

      // Diagonal families: x^a_{q+b} = x^q_{q+r} whenever (q+b)-a = r.
      for (int a = 1; a <= q; ++a) {
        for (int b = 1; b <= q; ++b) {
          int r = q + b - a;
          int expected = (r >= 1 && r <= q) ? xq(r) : 0;
          if (t.entries_in_row(a, q + b) != expected)
            record(where + ": x^" + std::to_string(a) + "_" +
                   std::to_string(q + b) + " != x^q_" + std::to_string(q + r));
        }
      }
      // Diagonal counts in the top rows: x^i_i = k - Σ_{r=q+1-i}^{q} x^q_{q+r}.
      for (int i = 1; i <= q; ++i) {
        int sum = 0;
        for (int r = q + 1 - i; r <= q; ++r) sum += xq(r);
        if (t.entries_in_row(i, i) != k - sum)
          record(where + ": x^" + std::to_string(i) + "_" +
                 std::to_string(i) + " != k - suffix sum");
      }
      // Nothing off-diagonal may land in the top q rows.
      for (int i = 1; i <= q; ++i)
        for (int jj = 1; jj <= q; ++jj)
          if (i != jj && t.entries_in_row(i, jj) != 0)
            record(where + ": off-diagonal x^" + std::to_string(i) + "_" +
                   std::to_string(jj) + " is nonzero");
    }
  }

  report.components_match_closed_form = (lr_support == closed_support);
  if (!report.components_match_closed_form)
    record("LR support differs from the closed-form component multiset");
  return report;
}

}  // namespace grassmoduli
