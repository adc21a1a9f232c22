#include "gra/relation.hpp"

#include <algorithm>
#include <sstream>

namespace gra {

ADRelation::ADRelation(int arity, std::vector<Tuple> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
  for (const Tuple& t : tuples_)
    if (static_cast<int>(t.size()) != arity_)
      throw Error("ADRelation: tuple length does not match arity");
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool ADRelation::contains(const Tuple& t) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

void ADRelation::insert(Tuple t) {
  if (static_cast<int>(t.size()) != arity_)
    throw Error("ADRelation::insert: tuple length does not match arity");
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
  if (it == tuples_.end() || *it != t) tuples_.insert(it, std::move(t));
}

ADRelation ADRelation::top(int arity, int n) { return ADRelation(arity, all_tuples(n, arity)); }

std::string ADRelation::to_string() const {
  std::ostringstream out;
  out << "(" << arity_ << "-ary:";
  for (const Tuple& t : tuples_) {
    out << " (";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << ",";
      out << t[i];
    }
    out << ")";
  }
  out << ")";
  return out.str();
}

std::vector<Tuple> all_tuples(int n, int k) {
  std::vector<Tuple> out;
  Tuple cur(k, 0);
  if (k == 0) {
    out.push_back(cur);
    return out;
  }
  if (n <= 0) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - 1) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

ADRelation rel_neg(const ADRelation& x, int n) {
  std::vector<Tuple> univ = all_tuples(n, x.arity());
  std::vector<Tuple> out;
  std::set_difference(univ.begin(), univ.end(), x.tuples().begin(), x.tuples().end(),
                      std::back_inserter(out));
  return ADRelation(x.arity(), std::move(out));
}

ADRelation rel_cap(const ADRelation& x, const ADRelation& y) {
  if (x.arity() != y.arity()) return ADRelation::bottom0();
  std::vector<Tuple> out;
  std::set_intersection(x.tuples().begin(), x.tuples().end(), y.tuples().begin(),
                        y.tuples().end(), std::back_inserter(out));
  return ADRelation(x.arity(), std::move(out));
}

ADRelation rel_dotcap(const ADRelation& x, const ADRelation& y, int n) {
  int k = x.arity(), l = y.arity();
  int m = std::max(k, l);
  std::vector<Tuple> out;
  for (const Tuple& t : all_tuples(n, m)) {
    Tuple sx(t.end() - k, t.end());
    Tuple sy(t.end() - l, t.end());
    if (x.contains(sx) && y.contains(sy)) out.push_back(t);
  }
  return ADRelation(m, std::move(out));
}

ADRelation rel_exists(const ADRelation& x) {
  if (x.arity() == 0) return x;
  std::vector<Tuple> out;
  for (const Tuple& t : x.tuples()) out.emplace_back(t.begin(), t.end() - 1);
  return ADRelation(x.arity() - 1, std::move(out));
}

ADRelation rel_exists1(const ADRelation& x) {
  if (x.arity() < 2) return x;
  std::vector<Tuple> out;
  for (const Tuple& t : x.tuples()) out.push_back(Tuple{t.front()});
  return ADRelation(1, std::move(out));
}

ADRelation rel_exists0(const ADRelation& x) {
  if (x.arity() == 0) return x;
  return x.empty() ? ADRelation::bottom0() : ADRelation::top0();
}

ADRelation rel_eq(const ADRelation& x) {
  if (x.arity() < 2) return x;
  std::vector<Tuple> out;
  for (const Tuple& t : x.tuples())
    if (t[t.size() - 2] == t[t.size() - 1]) out.push_back(t);
  return ADRelation(x.arity(), std::move(out));
}

ADRelation rel_subst(const ADRelation& x) {
  int k = x.arity();
  if (k <= 1) return x;
  std::vector<Tuple> out;
  for (const Tuple& t : x.tuples())
    if (t[k - 1] == t[k - 2]) out.emplace_back(t.begin(), t.end() - 1);
  return ADRelation(k - 1, std::move(out));
}

ADRelation rel_swap(const ADRelation& x) {
  int k = x.arity();
  if (k < 2) return x;
  std::vector<Tuple> out;
  for (Tuple t : x.tuples()) {
    std::swap(t[k - 1], t[k - 2]);
    out.push_back(std::move(t));
  }
  return ADRelation(k, std::move(out));
}

ADRelation rel_cyc(const ADRelation& x) {
  int k = x.arity();
  if (k < 2) return x;
  std::vector<Tuple> out;
  for (const Tuple& t : x.tuples()) {
    // t = (a_k, a_1, ..., a_{k-1}) is in X exactly when (a_1..a_k) is in pX.
    Tuple r(t.begin() + 1, t.end());
    r.push_back(t.front());
    out.push_back(std::move(r));
  }
  return ADRelation(k, std::move(out));
}

ADRelation rel_onedimcap(const ADRelation& x, const ADRelation& y) {
  int k = x.arity(), l = y.arity();
  if (k == 1 && l >= 1) {
    std::vector<Tuple> out;
    for (const Tuple& t : y.tuples())
      if (x.contains(Tuple{t.back()})) out.push_back(t);
    return ADRelation(l, std::move(out));
  }
  if (l == 1 && k >= 1) {
    std::vector<Tuple> out;
    for (const Tuple& t : x.tuples())
      if (y.contains(Tuple{t.back()})) out.push_back(t);
    return ADRelation(k, std::move(out));
  }
  return ADRelation::bottom0();
}

}  // namespace gra
