#include "qnss/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

#include "qnss/detail/basis_data.hpp"

namespace qnss {

int ModuleOrder::compare(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb) const {
  if (position == PositionOrder::PositionOverTerm) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return monomial.compare(ma, mb);
  }
  int c = monomial.compare(ma, mb);
  if (c != 0) return c;
  if (pa == pb) return 0;
  return pa < pb ? 1 : -1;
}

std::string ModuleOrder::describe() const {
  return monomial.describe() + (position == PositionOrder::PositionOverTerm ? "/pot" : "/top");
}

namespace detail {

MVec to_mvec(const VecPoly& v, const ModuleOrder& order) {
  MVec out;
  for (std::size_t p = 0; p < v.rank(); ++p) {
    for (const auto& [m, c] : v[p].terms()) out.push_back({static_cast<std::uint32_t>(p), m, c});
  }
  std::sort(out.begin(), out.end(),
            [&](const MTerm& a, const MTerm& b) { return order.compare(a.pos, a.mono, b.pos, b.mono) > 0; });
  return out;
}

VecPoly from_mvec(const MVec& v, std::size_t rank, std::size_t nvars) {
  std::vector<std::vector<MPoly::Term>> buckets(rank);
  for (const auto& t : v) buckets[t.pos].emplace_back(t.mono, t.coef);
  std::vector<MPoly> comps;
  comps.reserve(rank);
  for (auto& b : buckets) comps.push_back(MPoly::from_terms(nvars, std::move(b)));
  if (rank == 0) return VecPoly(0, nvars);
  return VecPoly(std::move(comps));
}

namespace {

Monomial::Exponent max_degree(const MVec& v) {
  Monomial::Exponent d = 0;
  for (const auto& t : v) d = std::max(d, t.mono.degree());
  return d;
}

// h[head..] - c * m * g, where g is multiplied termwise by the monomial m.
MVec sub_mul(const MVec& h, std::size_t head, const GaussQ& c, const Monomial& m, const MVec& g,
             const ModuleOrder& order) {
  MVec out;
  out.reserve(h.size() - head + g.size());
  std::size_t ih = head;
  std::size_t ig = 0;
  Monomial gm;
  bool have_gm = false;
  while (ih < h.size() || ig < g.size()) {
    if (ig < g.size() && !have_gm) {
      gm = g[ig].mono * m;
      have_gm = true;
    }
    int cmp;
    if (ih == h.size()) {
      cmp = -1;
    } else if (ig == g.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(h[ih].pos, h[ih].mono, g[ig].pos, gm);
    }
    if (cmp > 0) {
      out.push_back(h[ih++]);
    } else if (cmp < 0) {
      out.push_back({g[ig].pos, std::move(gm), -(c * g[ig].coef)});
      ++ig;
      have_gm = false;
    } else {
      GaussQ s = h[ih].coef - c * g[ig].coef;
      if (!s.is_zero()) out.push_back({h[ih].pos, h[ih].mono, std::move(s)});
      ++ih;
      ++ig;
      have_gm = false;
    }
  }
  return out;
}

void scale(MVec& v, const GaussQ& c) {
  for (auto& t : v) t.coef *= c;
}

struct Reducer {
  const ModuleOrder& order;
  std::span<const MVec* const> basis;
  std::span<const MVec* const> basis_cofactors;  // may be empty

  // Full normal form of h. Applies every reduction step to *cof as well
  // and records quotient terms when requested. Skips basis[skip].
  MVec normal_form(MVec h, MVec* cof, std::vector<std::vector<MPoly::Term>>* quotients,
                   std::size_t skip = std::numeric_limits<std::size_t>::max()) const {
    MVec rem;
    std::size_t head = 0;
    while (head < h.size()) {
      const MTerm& lt = h[head];
      std::size_t found = basis.size();
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j == skip) continue;
        const MTerm& g = basis[j]->front();
        if (g.pos == lt.pos && g.mono.divides(lt.mono)) {
          found = j;
          break;
        }
      }
      if (found == basis.size()) {
        rem.push_back(lt);
        ++head;
        continue;
      }
      const MVec& g = *basis[found];
      GaussQ c = lt.coef / g.front().coef;
      Monomial m = lt.mono / g.front().mono;
      if (cof != nullptr && !basis_cofactors.empty()) {
        *cof = sub_mul(*cof, 0, c, m, *basis_cofactors[found], order);
      }
      if (quotients != nullptr) (*quotients)[found].emplace_back(m, c);
      // The leading terms cancel; merge the tails.
      MVec tail(g.begin() + 1, g.end());
      h = sub_mul(h, head + 1, c, m, tail, order);
      head = 0;
    }
    return rem;
  }
};

struct Element {
  MVec vec;
  MVec cof;
  Monomial::Exponent sugar = 0;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t pos;
  Monomial::Exponent sugar;
};

void make_monic(Element& e) {
  GaussQ inv = e.vec.front().coef.inverse();
  if (inv.is_one()) return;
  scale(e.vec, inv);
  scale(e.cof, inv);
}

}  // namespace
}  // namespace detail

using detail::BasisData;
using detail::MTerm;
using detail::MVec;

namespace {

std::shared_ptr<BasisData> make_data(std::size_t rank, std::size_t nvars, const ModuleOrder& order) {
  auto d = std::make_shared<BasisData>();
  d->rank = rank;
  d->nvars = nvars;
  d->order = order;
  return d;
}

void check_vectors(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.rank() != rank) throw ShapeError("generator rank does not match the free module");
    if (rank > 0 && g.nvars() != nvars) throw ShapeError("generator lives in a different ring");
  }
}

}  // namespace

ModuleBasis ModuleBasis::from_generators(std::vector<VecPoly> generators, std::size_t rank, std::size_t nvars,
                                         ModuleOrder order) {
  check_vectors(generators, rank, nvars);
  auto d = make_data(rank, nvars, order);
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    d->vecs.push_back(detail::to_mvec(g, order));
    d->gens.push_back(std::move(g));
  }
  d->original = d->gens;
  d->has_cofactors = true;
  for (std::size_t j = 0; j < d->gens.size(); ++j) {
    std::vector<MPoly> cof(d->gens.size(), MPoly(nvars));
    cof[j] = MPoly::constant(nvars, 1);
    d->cofactors.push_back(std::move(cof));
  }
  ModuleBasis b;
  b.data_ = std::move(d);
  return b;
}

ModuleBasis ModuleBasis::assemble(std::vector<VecPoly> generators, std::size_t rank, std::size_t nvars,
                                  ModuleOrder order, bool reduced, std::vector<VecPoly> original,
                                  std::vector<std::vector<MPoly>> cofactors) {
  check_vectors(generators, rank, nvars);
  check_vectors(original, rank, nvars);
  auto d = make_data(rank, nvars, order);
  d->reduced = reduced;
  for (const auto& g : generators) {
    if (g.is_zero()) throw InvalidInput("basis generators must be nonzero");
    d->vecs.push_back(detail::to_mvec(g, order));
  }
  d->gens = std::move(generators);
  if (!cofactors.empty()) {
    if (cofactors.size() != d->gens.size()) throw InvalidInput("cofactor table has the wrong length");
    for (const auto& row : cofactors) {
      if (row.size() != original.size()) throw InvalidInput("cofactor row has the wrong length");
    }
    d->has_cofactors = true;
    d->original = std::move(original);
    d->cofactors = std::move(cofactors);
  }
  ModuleBasis b;
  b.data_ = std::move(d);
  return b;
}

namespace {
const BasisData& empty_data() {
  static const BasisData d;
  return d;
}
}  // namespace

#define QNSS_DATA (data_ ? *data_ : empty_data())

std::size_t ModuleBasis::rank() const { return QNSS_DATA.rank; }
std::size_t ModuleBasis::nvars() const { return QNSS_DATA.nvars; }
std::size_t ModuleBasis::size() const { return QNSS_DATA.gens.size(); }
const std::vector<VecPoly>& ModuleBasis::generators() const { return QNSS_DATA.gens; }
const ModuleOrder& ModuleBasis::order() const { return QNSS_DATA.order; }
bool ModuleBasis::reduced() const { return QNSS_DATA.reduced; }
bool ModuleBasis::has_cofactors() const { return QNSS_DATA.has_cofactors; }
const std::vector<VecPoly>& ModuleBasis::original() const { return QNSS_DATA.original; }
const std::vector<MPoly>& ModuleBasis::cofactors(std::size_t j) const { return QNSS_DATA.cofactors.at(j); }
std::size_t ModuleBasis::leading_position(std::size_t j) const { return QNSS_DATA.vecs.at(j).front().pos; }
const Monomial& ModuleBasis::leading_monomial(std::size_t j) const { return QNSS_DATA.vecs.at(j).front().mono; }

#undef QNSS_DATA

bool ModuleBasis::is_unit_module() const {
  if (!data_) return false;
  std::vector<bool> seen(data_->rank, false);
  for (const auto& v : data_->vecs) {
    if (v.front().mono.is_one()) seen[v.front().pos] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool operator==(const ModuleBasis& a, const ModuleBasis& b) {
  return a.rank() == b.rank() && a.nvars() == b.nvars() && a.order() == b.order() && a.reduced() == b.reduced() &&
         a.generators() == b.generators();
}

ModuleBasis buchberger_module(std::span<const VecPoly> gens, const GroebnerOptions& options) {
  if (gens.empty()) throw InvalidInput("cannot infer the free module from an empty generator list");
  return buchberger_module(gens, gens.front().rank(), gens.front().nvars(), options);
}

ModuleBasis buchberger_module(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars,
                              const GroebnerOptions& options) {
  using detail::Element;
  using detail::Pair;
  check_vectors(gens, rank, nvars);
  const ModuleOrder& order = options.order;
  const bool track = options.track_cofactors;

  std::vector<Element> G;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](Element e) {
    detail::make_monic(e);
    std::size_t k = G.size();
    const MTerm& lk = e.vec.front();
    for (std::size_t i = 0; i < k; ++i) {
      const MTerm& li = G[i].vec.front();
      if (li.pos != lk.pos) continue;
      // The coprime-leading-term criterion is only valid for ideals: in
      // rank > 1 the S-vector of coprime leads need not reduce to zero.
      if (rank == 1 && li.mono.coprime(lk.mono)) continue;
      Monomial l = li.mono.lcm(lk.mono);
      Monomial::Exponent s = std::max(G[i].sugar + (l.degree() - li.mono.degree()),
                                      e.sugar + (l.degree() - lk.mono.degree()));
      pairs.push_back({i, k, std::move(l), lk.pos, s});
      pending.insert({i, k});
    }
    G.push_back(std::move(e));
  };

  for (std::size_t k = 0; k < gens.size(); ++k) {
    MVec v = detail::to_mvec(gens[k], order);
    if (v.empty()) continue;
    Element e;
    e.sugar = detail::max_degree(v);
    e.vec = std::move(v);
    if (track) e.cof.push_back({static_cast<std::uint32_t>(k), Monomial(nvars), GaussQ(1)});
    add_element(std::move(e));
  }

  std::size_t processed = 0;
  std::vector<const MVec*> vec_ptrs;
  std::vector<const MVec*> cof_ptrs;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order.compare(a.pos, a.lcm, b.pos, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    pending.erase({p.i, p.j});

    if (p.lcm.degree() > options.degree_cap) {
      throw ResourceExceeded("S-pair degree " + std::to_string(p.lcm.degree()) + " exceeds the cap of " +
                             std::to_string(options.degree_cap));
    }
    if (++processed > options.pair_budget) throw ResourceExceeded("S-pair budget exhausted");

    // Chain criterion: skip when some other lead divides the lcm and both
    // companion pairs are already treated.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      const MTerm& lk = G[k].vec.front();
      if (lk.pos != p.pos || !lk.mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    const Element& gi = G[p.i];
    const Element& gj = G[p.j];
    Monomial mi = p.lcm / gi.vec.front().mono;
    Monomial mj = p.lcm / gj.vec.front().mono;
    // Both are monic, so the leading terms cancel.
    MVec si = detail::sub_mul(MVec{}, 0, GaussQ(-1), mi, gi.vec, order);
    MVec s = detail::sub_mul(si, 0, GaussQ(1), mj, gj.vec, order);
    MVec scof;
    if (track) {
      MVec ci = detail::sub_mul(MVec{}, 0, GaussQ(-1), mi, gi.cof, order);
      scof = detail::sub_mul(ci, 0, GaussQ(1), mj, gj.cof, order);
    }
    if (s.empty()) continue;

    vec_ptrs.clear();
    cof_ptrs.clear();
    for (const auto& e : G) {
      vec_ptrs.push_back(&e.vec);
      if (track) cof_ptrs.push_back(&e.cof);
    }
    detail::Reducer reducer{order, vec_ptrs, cof_ptrs};
    MVec r = reducer.normal_form(std::move(s), track ? &scof : nullptr, nullptr);
    if (r.empty()) continue;
    Element e;
    e.vec = std::move(r);
    e.cof = std::move(scof);
    e.sugar = p.sugar;
    add_element(std::move(e));
  }

  // Minimize: drop elements whose lead is divisible by another lead.
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < G.size(); ++j) {
    const MTerm& lj = G[j].vec.front();
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == j) continue;
      const MTerm& lk = G[k].vec.front();
      if (lk.pos != lj.pos || !lk.mono.divides(lj.mono)) continue;
      if (lk.mono != lj.mono) {
        redundant = true;
      } else if (std::find(keep.begin(), keep.end(), k) != keep.end()) {
        redundant = true;  // equal leads: the earlier survivor wins
      }
    }
    if (!redundant) keep.push_back(j);
  }
  std::vector<Element> minimal;
  minimal.reserve(keep.size());
  for (std::size_t j : keep) minimal.push_back(std::move(G[j]));

  // Interreduce tails. Leading terms are fixed, so one pass suffices.
  vec_ptrs.clear();
  cof_ptrs.clear();
  for (const auto& e : minimal) {
    vec_ptrs.push_back(&e.vec);
    if (track) cof_ptrs.push_back(&e.cof);
  }
  for (std::size_t j = 0; j < minimal.size(); ++j) {
    detail::Reducer reducer{order, vec_ptrs, cof_ptrs};
    MVec cof = minimal[j].cof;
    MVec tail(minimal[j].vec.begin() + 1, minimal[j].vec.end());
    MVec r = reducer.normal_form(std::move(tail), track ? &cof : nullptr, nullptr, j);
    MVec full;
    full.reserve(r.size() + 1);
    full.push_back(minimal[j].vec.front());
    for (auto& t : r) full.push_back(std::move(t));
    minimal[j].vec = std::move(full);
    if (track) minimal[j].cof = std::move(cof);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Element& a, const Element& b) {
    const MTerm& la = a.vec.front();
    const MTerm& lb = b.vec.front();
    return order.compare(la.pos, la.mono, lb.pos, lb.mono) < 0;
  });

  auto d = make_data(rank, nvars, order);
  d->reduced = true;
  d->has_cofactors = track;
  if (track) d->original.assign(gens.begin(), gens.end());
  for (auto& e : minimal) {
    d->gens.push_back(detail::from_mvec(e.vec, rank, nvars));
    if (track) {
      std::vector<std::vector<MPoly::Term>> buckets(gens.size());
      for (auto& t : e.cof) buckets[t.pos].emplace_back(t.mono, t.coef);
      std::vector<MPoly> row;
      row.reserve(gens.size());
      for (auto& b : buckets) row.push_back(MPoly::from_terms(nvars, std::move(b)));
      d->cofactors.push_back(std::move(row));
    }
    d->vecs.push_back(std::move(e.vec));
  }
  ModuleBasis b;
  b.data_ = std::move(d);
  return b;
}

Division divide_with_quotients(const VecPoly& v, const ModuleBasis& basis) {
  if (v.rank() != basis.rank() || (v.rank() > 0 && v.nvars() != basis.nvars())) {
    throw ShapeError("vector does not live in the basis' free module");
  }
  const BasisData& d = basis.data();
  std::vector<const MVec*> ptrs;
  ptrs.reserve(d.vecs.size());
  for (const auto& g : d.vecs) ptrs.push_back(&g);
  detail::Reducer reducer{d.order, ptrs, {}};
  std::vector<std::vector<MPoly::Term>> quot(d.vecs.size());
  MVec r = reducer.normal_form(detail::to_mvec(v, d.order), nullptr, &quot);
  Division out;
  out.quotients.reserve(quot.size());
  for (auto& q : quot) out.quotients.push_back(MPoly::from_terms(d.nvars, std::move(q)));
  out.remainder = detail::from_mvec(r, d.rank, d.nvars);
  return out;
}

std::optional<MembershipCertificate> module_membership(const VecPoly& v, const ModuleBasis& basis,
                                                       bool to_original) {
  Division div = divide_with_quotients(v, basis);
  if (!div.remainder.is_zero()) return std::nullopt;
  MembershipCertificate cert;
  if (!to_original || !basis.has_cofactors()) {
    cert.quotients = std::move(div.quotients);
    return cert;
  }
  const std::size_t count = basis.original().size();
  cert.quotients.assign(count, MPoly(basis.nvars()));
  for (std::size_t j = 0; j < div.quotients.size(); ++j) {
    if (div.quotients[j].is_zero()) continue;
    const auto& cof = basis.cofactors(j);
    for (std::size_t k = 0; k < count; ++k) {
      if (!cof[k].is_zero()) cert.quotients[k] += div.quotients[j] * cof[k];
    }
  }
  cert.wrt_original = true;
  return cert;
}

VecPoly expand_combination(std::span<const MPoly> quotients, std::span<const VecPoly> gens, std::size_t rank,
                           std::size_t nvars) {
  if (quotients.size() != gens.size()) throw ShapeError("one quotient per generator is required");
  VecPoly sum(rank, nvars);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!quotients[j].is_zero()) sum += quotients[j] * gens[j];
  }
  return sum;
}

std::vector<VecPoly> module_intersect(std::span<const VecPoly> m1, std::span<const VecPoly> m2, std::size_t rank,
                                      std::size_t nvars, const GroebnerOptions& options) {
  check_vectors(m1, rank, nvars);
  check_vectors(m2, rank, nvars);
  const std::size_t tag = nvars;
  const std::size_t ext = nvars + 1;
  MPoly t = MPoly::variable(ext, tag);
  MPoly one_minus_t = MPoly::constant(ext, 1) - t;
  auto lift = [&](const VecPoly& v) {
    std::vector<MPoly> comps;
    for (const auto& c : v.components()) comps.push_back(extend_variables(c, 1));
    return VecPoly(std::move(comps));
  };
  std::vector<VecPoly> tagged;
  for (const auto& g : m1) tagged.push_back(t * lift(g));
  for (const auto& g : m2) tagged.push_back(one_minus_t * lift(g));

  GroebnerOptions elim = options;
  elim.track_cofactors = false;
  elim.order.position = PositionOrder::TermOverPosition;
  elim.order.monomial = MonomialOrder::eliminate(ext, tag);
  if (options.order.monomial.kind == MonomialOrder::Kind::Lex) elim.order.monomial.kind = MonomialOrder::Kind::Lex;
  ModuleBasis gb = buchberger_module(tagged, rank, ext, elim);

  std::vector<VecPoly> free_of_tag;
  for (const auto& g : gb.generators()) {
    bool has_tag = false;
    for (const auto& c : g.components()) {
      for (const auto& term : c.terms()) has_tag = has_tag || term.first[tag] != 0;
    }
    if (has_tag) continue;
    std::vector<MPoly> comps;
    for (const auto& c : g.components()) comps.push_back(split_by_variable(c, tag).empty()
                                                              ? MPoly(nvars)
                                                              : split_by_variable(c, tag).front());
    free_of_tag.emplace_back(std::move(comps));
  }
  GroebnerOptions base = options;
  base.track_cofactors = false;
  return buchberger_module(free_of_tag, rank, nvars, base).generators();
}

bool s_vectors_reduce_to_zero(const ModuleBasis& basis) {
  const BasisData& d = basis.data();
  std::vector<const MVec*> ptrs;
  for (const auto& g : d.vecs) ptrs.push_back(&g);
  detail::Reducer reducer{d.order, ptrs, {}};
  for (std::size_t i = 0; i < d.vecs.size(); ++i) {
    for (std::size_t j = i + 1; j < d.vecs.size(); ++j) {
      const MTerm& li = d.vecs[i].front();
      const MTerm& lj = d.vecs[j].front();
      if (li.pos != lj.pos) continue;
      Monomial l = li.mono.lcm(lj.mono);
      GaussQ ci = li.coef.inverse();
      GaussQ cj = lj.coef.inverse();
      MVec si = detail::sub_mul(MVec{}, 0, -ci, l / li.mono, d.vecs[i], d.order);
      MVec s = detail::sub_mul(si, 0, cj, l / lj.mono, d.vecs[j], d.order);
      if (!reducer.normal_form(std::move(s), nullptr, nullptr).empty()) return false;
    }
  }
  return true;
}

}  // namespace qnss
