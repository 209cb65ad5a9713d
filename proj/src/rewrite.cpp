#include "hocat/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hocat {

namespace {

// true if a < b in the termination order (length, then lex)
bool order_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int word_obj_src(const Presentation& P, const std::vector<int>& w, int obj) {
  return w.empty() ? obj : P.gens[w.front()].src;
}

}  // namespace

Word RewriteEngine::normalize(const Presentation& P, Word w) const {
  (void)P;
  bool changed = true;
  int guard = 0;
  while (changed) {
    if (++guard > 100000) throw std::runtime_error("normalize: reduction too long");
    changed = false;
    for (size_t pos = 0; pos <= w.gens.size() && !changed; ++pos) {
      for (const auto& r : rules) {
        if (pos + r.lhs.size() > w.gens.size()) continue;
        if (!std::equal(r.lhs.begin(), r.lhs.end(), w.gens.begin() + pos))
          continue;
        std::vector<int> out(w.gens.begin(), w.gens.begin() + pos);
        out.insert(out.end(), r.rhs.begin(), r.rhs.end());
        out.insert(out.end(), w.gens.begin() + pos + r.lhs.size(), w.gens.end());
        w.gens = std::move(out);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::string RewriteEngine::dump(const Presentation& P) const {
  auto side = [&](const std::vector<int>& w) {
    if (w.empty()) return std::string("eps");
    std::string s;
    for (int g : w) {
      if (!s.empty()) s += ";";
      s += P.gens[g].id;
    }
    return s;
  };
  std::string out;
  for (const auto& r : rules) out += side(r.lhs) + " -> " + side(r.rhs) + "\n";
  if (status == Status::Complete) {
    out += "complete\n";
  } else {
    out += "budget-exhausted(max_lhs=" + std::to_string(max_lhs_len) +
           ", rules=" + std::to_string(rules.size()) + ")\n";
  }
  return out;
}

RewriteEngine knuth_bendix(const Presentation& P, int max_rules, int max_lhs) {
  RewriteEngine E;
  std::set<std::pair<std::vector<int>, std::vector<int>>> have;

  auto add_equation = [&](std::vector<int> a, std::vector<int> b,
                          int obj) -> bool {
    // returns false if budget is exhausted
    Word wa = E.normalize(P, {word_obj_src(P, a, obj), a});
    Word wb = E.normalize(P, {word_obj_src(P, b, obj), b});
    if (wa.gens == wb.gens) return true;
    std::vector<int> lhs = wa.gens, rhs = wb.gens;
    if (order_less(lhs, rhs)) std::swap(lhs, rhs);
    if (have.count({lhs, rhs})) return true;
    if (int(E.rules.size()) >= max_rules || int(lhs.size()) > max_lhs) {
      E.status = RewriteEngine::Status::BudgetExhausted;
      return false;
    }
    have.insert({lhs, rhs});
    E.rules.push_back({lhs, rhs, obj});
    E.max_lhs_len = std::max(E.max_lhs_len, int(lhs.size()));
    return true;
  };

  for (const auto& r : P.rels)
    if (!add_equation(r.lhs, r.rhs, r.obj)) return E;

  // process critical pairs until fixed point; new rules re-open earlier pairs
  size_t processed = 0;
  while (processed < E.rules.size()) {
    size_t n = E.rules.size();
    // pair every rule with rules up to the current frontier once more
    for (size_t i = 0; i < n; ++i) {
      size_t j0 = (i < processed) ? processed : 0;
      for (size_t j = j0; j < n; ++j) {
        const auto r1 = E.rules[i];  // copies: E.rules may grow
        const auto r2 = E.rules[j];
        // proper overlap: suffix of l1 == prefix of l2
        int len1 = int(r1.lhs.size()), len2 = int(r2.lhs.size());
        for (int k = 1; k < std::min(len1, len2); ++k) {
          if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + k,
                          r1.lhs.end() - k))
            continue;
          std::vector<int> super(r1.lhs.begin(), r1.lhs.end());
          super.insert(super.end(), r2.lhs.begin() + k, r2.lhs.end());
          std::vector<int> red1 = r1.rhs;
          red1.insert(red1.end(), r2.lhs.begin() + k, r2.lhs.end());
          std::vector<int> red2(r1.lhs.begin(), r1.lhs.end() - k);
          red2.insert(red2.end(), r2.rhs.begin(), r2.rhs.end());
          int obj = word_obj_src(P, super, r1.obj);
          if (!add_equation(red1, red2, obj)) return E;
        }
        // containment: l2 inside l1
        if (len2 < len1 || (len2 == len1 && i != j)) {
          for (int pos = 0; pos + len2 <= len1; ++pos) {
            if (!std::equal(r2.lhs.begin(), r2.lhs.end(),
                            r1.lhs.begin() + pos))
              continue;
            std::vector<int> red2(r1.lhs.begin(), r1.lhs.begin() + pos);
            red2.insert(red2.end(), r2.rhs.begin(), r2.rhs.end());
            red2.insert(red2.end(), r1.lhs.begin() + pos + len2, r1.lhs.end());
            if (!add_equation(r1.rhs, red2, r1.obj)) return E;
          }
        }
      }
    }
    processed = n;
  }
  return E;
}

}  // namespace hocat
