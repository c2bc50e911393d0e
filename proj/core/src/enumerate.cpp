#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

#include "rrs/canonical.hpp"
#include "rrs/directoid.hpp"
#include "rrs/negation.hpp"
#include "rrs/search.hpp"

namespace rrs {

namespace {

constexpr std::size_t kMaxEnumerationSize = 7;

struct Perm {
  std::array<Element, kMaxEnumerationSize> fwd{};
  std::array<Element, kMaxEnumerationSize> inv{};
};

using PermList = std::vector<const Perm*>;

// Each comparison returns <0, 0, >0 as the permuted component compares to
// the model's own component in key order.

int cmp_element(Element own, const Perm& p) {
  const Element permuted = p.fwd[own];
  return permuted == own ? 0 : (permuted < own ? -1 : 1);
}

int cmp_table(const OpTable& t, const Perm& p) {
  const auto n = static_cast<Element>(t.size());
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      const Element permuted = p.fwd[t(p.inv[i], p.inv[j])];
      const Element own = t(i, j);
      if (permuted != own) return permuted < own ? -1 : 1;
    }
  }
  return 0;
}

int cmp_rel(const BinRel& r, const Perm& p) {
  const auto n = static_cast<Element>(r.size());
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      const bool permuted = r.holds(p.inv[i], p.inv[j]);
      const bool own = r.holds(i, j);
      if (permuted != own) return permuted ? 1 : -1;
    }
  }
  return 0;
}

/// Keeps only the permutations that tie on the next key component; false if
/// one of them makes the key smaller (the model is not canonical).
template <class Cmp>
bool refine(PermList& stab, Cmp&& cmp) {
  PermList next;
  next.reserve(stab.size());
  for (const Perm* p : stab) {
    const int c = cmp(*p);
    if (c < 0) return false;
    if (c == 0) next.push_back(p);
  }
  stab.swap(next);
  return true;
}

template <class Cmp>
bool minimal_under(const PermList& stab, Cmp&& cmp) {
  return std::none_of(stab.begin(), stab.end(), [&](const Perm* p) { return cmp(*p) < 0; });
}

/// Odometer over per-cell candidate lists, first cell most significant, so
/// tables come out in increasing lexicographic order.  Returns false if f
/// asked to stop.
template <class F>
bool for_each_table(const std::vector<std::vector<Element>>& cands, OpTable& table, F&& f) {
  const std::size_t n = table.size();
  for (const auto& c : cands) {
    if (c.empty()) return true;
  }
  std::vector<std::size_t> pick(cands.size(), 0);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    table.set(static_cast<Element>(i / n), static_cast<Element>(i % n), cands[i][0]);
  }
  while (true) {
    if (!f()) return false;
    std::size_t i = cands.size();
    while (i > 0) {
      --i;
      if (++pick[i] < cands[i].size()) {
        table.set(static_cast<Element>(i / n), static_cast<Element>(i % n), cands[i][pick[i]]);
        break;
      }
      pick[i] = 0;
      table.set(static_cast<Element>(i / n), static_cast<Element>(i % n), cands[i][0]);
      if (i == 0) return true;
    }
  }
}

std::optional<Element> absorbing_element(const OpTable& mul) {
  const auto n = static_cast<Element>(mul.size());
  for (Element z = 0; z < n; ++z) {
    bool absorbs = true;
    for (Element x = 0; x < n && absorbs; ++x) {
      absorbs = mul(z, x) == z && mul(x, z) == z;
    }
    if (absorbs) return z;
  }
  return std::nullopt;
}

std::vector<OpTable> commutative_monoids(std::size_t n, Element unit) {
  OpTable t(n);
  std::vector<std::pair<Element, Element>> free;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == unit) {
        t.set(x, y, y);
      } else if (y == unit) {
        t.set(x, y, x);
      } else if (x <= y) {
        free.emplace_back(x, y);
      }
    }
  }
  std::vector<OpTable> out;
  std::vector<Element> digits(free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      t.set(free[i].first, free[i].second, digits[i]);
      t.set(free[i].second, free[i].first, digits[i]);
    }
    if (is_commutative_monoid(t, unit)) out.push_back(t);
    std::size_t i = free.size();
    bool advanced = false;
    while (i > 0 && !advanced) {
      --i;
      if (++digits[i] < n) {
        advanced = true;
      } else {
        digits[i] = 0;
      }
    }
    if (!advanced) break;
  }
  return out;
}

bool wants_preorder(ModelClass c) {
  return c == ModelClass::preordered_rrs || c == ModelClass::residuated_quasi_directoid;
}

// Relations with (x, unit) in R for every x, in increasing key order,
// filtered by what the class requires.
std::vector<BinRel> unit_topped_relations(std::size_t n, Element unit, ModelClass c) {
  std::vector<std::pair<Element, Element>> free;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y != unit) free.emplace_back(x, y);
    }
  }
  const std::size_t k = free.size();
  std::vector<BinRel> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    BinRel r(n);
    for (Element x = 0; x < n; ++x) r.set(x, unit);
    for (std::size_t i = 0; i < k; ++i) {
      if (((code >> (k - 1 - i)) & 1U) != 0) r.set(free[i].first, free[i].second);
    }
    if (wants_preorder(c) && !is_preorder(r)) continue;
    if (c == ModelClass::antisym_rrs && !is_antisymmetric(r)) continue;
    out.push_back(std::move(r));
  }
  return out;
}

struct JoinWithOrder {
  OpTable join;
  BinRel rel;
};

// Join tables with x|x = x and x|1 = 1 satisfying the quasi-directoid
// axioms, ordered by (induced relation, join) key.
std::vector<JoinWithOrder> unit_topped_quasi_directoids(std::size_t n, Element unit) {
  OpTable t(n);
  std::vector<std::pair<Element, Element>> free;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y == unit) {
        t.set(x, y, unit);
      } else if (x == y) {
        t.set(x, y, x);
      } else {
        free.emplace_back(x, y);
      }
    }
  }
  std::vector<std::vector<Element>> cands(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) cands[x * n + y] = {t(x, y)};
  }
  std::vector<Element> all(n);
  for (Element v = 0; v < n; ++v) all[v] = v;
  for (auto [x, y] : free) cands[x * n + y] = all;

  std::vector<JoinWithOrder> out;
  for_each_table(cands, t, [&] {
    if (satisfies_quasi_directoid_axioms(t)) {
      BinRel r(n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (t(x, y) == y) r.set(x, y);
        }
      }
      out.push_back({t, std::move(r)});
    }
    return true;
  });
  std::stable_sort(out.begin(), out.end(), [n](const JoinWithOrder& a, const JoinWithOrder& b) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const bool ra = a.rel.holds(x, y);
        const bool rb = b.rel.holds(x, y);
        if (ra != rb) return rb;
      }
    }
    return false;  // equal relations keep join order from the odometer
  });
  return out;
}

struct Shard {
  Element unit = 0;
  std::optional<Element> zero;
  OpTable mul;
  PermList stab;
};

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, bool collapse_ties)
      : spec_(spec), n_(spec.size), collapse_ties_(collapse_ties) {
    if (n_ == 0) throw Error("enumerate: size must be at least 1");
    if (n_ > kMaxEnumerationSize) throw Error("enumerate: size beyond the supported range");
    build_perms();
    build_shards();
  }

  const std::vector<Shard>& shards() const noexcept { return shards_; }

  /// False if the visitor asked to stop.
  bool run(const Shard& s, const ModelVisitor& visit) const {
    Model cur;
    cur.size = n_;
    cur.unit = s.unit;
    cur.zero = s.zero;
    cur.mul = s.mul;
    cur.arrow = OpTable(n_);
    const bool iso = spec_.up_to_iso;

    if (spec_.model_class == ModelClass::pre_axioms_minus_g) {
      std::vector<std::vector<Element>> all_cells(n_ * n_);
      for (auto& c : all_cells) {
        for (Element v = 0; v < n_; ++v) c.push_back(v);
      }
      for (const auto& jo : joins_.at(s.unit)) {
        PermList st = s.stab;
        if (iso && (!refine(st, [&](const Perm& p) { return cmp_rel(jo.rel, p); }) ||
                    !refine(st, [&](const Perm& p) { return cmp_table(jo.join, p); }))) {
          continue;
        }
        cur.rel = jo.rel;
        cur.join = jo.join;
        const bool go = for_each_table(all_cells, cur.arrow, [&] {
          if (iso && !minimal_under(st, [&](const Perm& p) { return cmp_table(cur.arrow, p); })) {
            return true;
          }
          return visit(cur);
        });
        if (!go) return false;
      }
      return true;
    }

    for (const BinRel& r : relations_.at(s.unit)) {
      PermList st = s.stab;
      if (iso && !refine(st, [&](const Perm& p) { return cmp_rel(r, p); })) continue;
      cur.rel = r;
      auto arrow_cands = solve_residuum(cur.mul, r);
      if (!arrow_cands) continue;
      if (collapse_ties_) {
        for (auto& c : *arrow_cands) c.resize(1);
      }

      const auto emit_arrows = [&](const PermList& stab) {
        return for_each_table(*arrow_cands, cur.arrow, [&] {
          if (iso && !collapse_ties_ &&
              !minimal_under(stab, [&](const Perm& p) { return cmp_table(cur.arrow, p); })) {
            return true;
          }
          return visit(cur);
        });
      };

      if (spec_.model_class != ModelClass::residuated_quasi_directoid) {
        if (!emit_arrows(st)) return false;
        continue;
      }

      OpTable join(n_);
      const auto join_cands = join_candidates(r);
      const bool go = for_each_table(join_cands, join, [&] {
        if (!satisfies_quasi_directoid_axioms(join)) return true;
        PermList st2 = st;
        if (iso && !refine(st2, [&](const Perm& p) { return cmp_table(join, p); })) return true;
        cur.join = join;
        const bool more = emit_arrows(st2);
        cur.join.reset();
        return more;
      });
      if (!go) return false;
    }
    return true;
  }

 private:
  void build_perms() {
    std::vector<Element> p(n_);
    for (Element i = 0; i < n_; ++i) p[i] = i;
    while (std::next_permutation(p.begin(), p.end())) {  // skips the identity
      Perm perm;
      for (Element i = 0; i < n_; ++i) {
        perm.fwd[i] = p[i];
        perm.inv[p[i]] = i;
      }
      perms_.push_back(perm);
    }
  }

  void build_shards() {
    const ModelClass c = spec_.model_class;
    const std::size_t units = spec_.up_to_iso ? 1 : n_;
    for (Element u = 0; u < units; ++u) {
      bool any = false;
      for (OpTable& mul : commutative_monoids(n_, u)) {
        Shard s;
        s.unit = u;
        if (c == ModelClass::rrs_with_zero) {
          s.zero = absorbing_element(mul);
          if (!s.zero) continue;
        }
        s.mul = std::move(mul);
        for (const Perm& p : perms_) s.stab.push_back(&p);
        if (spec_.up_to_iso) {
          const bool keep =
              refine(s.stab, [&](const Perm& p) { return cmp_element(s.unit, p); }) &&
              (!s.zero || refine(s.stab, [&](const Perm& p) { return cmp_element(*s.zero, p); })) &&
              refine(s.stab, [&](const Perm& p) { return cmp_table(s.mul, p); });
          if (!keep) continue;
        }
        shards_.push_back(std::move(s));
        any = true;
      }
      if (!any) continue;
      if (c == ModelClass::pre_axioms_minus_g) {
        joins_[u] = unit_topped_quasi_directoids(n_, u);
      } else {
        relations_[u] = unit_topped_relations(n_, u, c);
      }
    }
    std::stable_sort(shards_.begin(), shards_.end(), [](const Shard& a, const Shard& b) {
      if (a.unit != b.unit) return a.unit < b.unit;
      if (a.zero != b.zero) return a.zero < b.zero;
      return std::lexicographical_compare(a.mul.entries().begin(), a.mul.entries().end(),
                                          b.mul.entries().begin(), b.mul.entries().end());
    });
  }

  std::optional<std::vector<std::vector<Element>>> solve_residuum(const OpTable& mul,
                                                                  const BinRel& r) const {
    std::vector<std::uint64_t> cols(n_);
    for (Element w = 0; w < n_; ++w) cols[w] = r.column(w);
    std::vector<std::vector<Element>> cands(n_ * n_);
    for (Element y = 0; y < n_; ++y) {
      for (Element z = 0; z < n_; ++z) {
        std::uint64_t target = 0;
        for (Element x = 0; x < n_; ++x) {
          if (r.holds(mul(x, y), z)) target |= std::uint64_t{1} << x;
        }
        auto& c = cands[y * n_ + z];
        for (Element w = 0; w < n_; ++w) {
          if (cols[w] == target) c.push_back(w);
        }
        if (c.empty()) return std::nullopt;
      }
    }
    return cands;
  }

  // x|y = y when x <= y; otherwise a common upper bound of x and y other than y.
  std::vector<std::vector<Element>> join_candidates(const BinRel& r) const {
    std::vector<std::vector<Element>> cands(n_ * n_);
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        auto& c = cands[x * n_ + y];
        if (r.holds(x, y)) {
          c.push_back(y);
          continue;
        }
        const std::uint64_t cone = r.row(x) & r.row(y);
        for (Element w = 0; w < n_; ++w) {
          if (((cone >> w) & 1U) != 0 && w != y) c.push_back(w);
        }
      }
    }
    return cands;
  }

  SearchSpec spec_;
  bool collapse_ties_;
  std::size_t n_;
  std::vector<Perm> perms_;
  std::vector<Shard> shards_;
  std::map<Element, std::vector<BinRel>> relations_;
  std::map<Element, std::vector<JoinWithOrder>> joins_;
};

void check_cap(const SearchSpec& spec, const EnumerateOptions& options) {
  const std::size_t cap = options.size_cap.value_or(default_size_cap(spec.model_class));
  if (spec.size > cap) {
    throw Error("size " + std::to_string(spec.size) + " exceeds the cap " + std::to_string(cap) +
                " for class " + std::string(to_string(spec.model_class)) +
                " (raise it with RRS_MAX_SIZE)");
  }
}

}  // namespace

std::string_view to_string(ModelClass c) noexcept {
  switch (c) {
    case ModelClass::rrs:
      return "rrs";
    case ModelClass::preordered_rrs:
      return "preordered-rrs";
    case ModelClass::antisym_rrs:
      return "antisym-rrs";
    case ModelClass::rrs_with_zero:
      return "rrs-with-0";
    case ModelClass::residuated_quasi_directoid:
      return "residuated-quasi-directoid";
    case ModelClass::pre_axioms_minus_g:
      return "pre-axioms-minus-g";
  }
  return "unknown";
}

const std::vector<ModelClass>& all_model_classes() {
  static const std::vector<ModelClass> classes = {
      ModelClass::rrs,           ModelClass::preordered_rrs,
      ModelClass::antisym_rrs,   ModelClass::rrs_with_zero,
      ModelClass::residuated_quasi_directoid, ModelClass::pre_axioms_minus_g};
  return classes;
}

ModelClass parse_model_class(std::string_view name) {
  for (ModelClass c : all_model_classes()) {
    if (to_string(c) == name) return c;
  }
  throw Error("unknown model class '" + std::string(name) + "'");
}

PropertyReport class_report(const Model& m, ModelClass c) {
  m.validate_shape();
  PropertyReport r;
  if (c == ModelClass::residuated_quasi_directoid || c == ModelClass::pre_axioms_minus_g) {
    if (!m.join) {
      for (const char* id : {"directoid.a", "directoid.b", "directoid.c", "directoid.e",
                             "directoid.f", "directoid.g"}) {
        if (c == ModelClass::residuated_quasi_directoid || std::string_view(id) != "directoid.g") {
          r.add_not_applicable(id, "model has no join table");
        }
      }
      return r;
    }
    const PropertyReport full = is_residuated_quasi_directoid(QuasiDirectoid(m));
    for (const auto& item : full.items()) {
      if (c == ModelClass::pre_axioms_minus_g && item.id == "directoid.g") continue;
      r.add(item);
    }
    return r;
  }
  r.append(check_commutative_monoid(m));
  r.append(check_unit_top(m));
  r.append(check_residuation(m));
  const BinRel& R = m.rel;
  if (c == ModelClass::preordered_rrs) {
    std::optional<Element> irreflexive;
    for (Element x = 0; x < m.size && !irreflexive; ++x) {
      if (!R.holds(x, x)) irreflexive = x;
    }
    if (irreflexive) {
      r.add_fails("relation.reflexive", {*irreflexive});
    } else {
      r.add_holds("relation.reflexive");
    }
    if (auto t = transitivity_violation(R)) {
      r.add_fails("relation.transitive", {(*t)[0], (*t)[1], (*t)[2]});
    } else {
      r.add_holds("relation.transitive");
    }
  }
  if (c == ModelClass::antisym_rrs) {
    std::optional<std::vector<Element>> pair;
    for (Element x = 0; x < m.size && !pair; ++x) {
      for (Element y = 0; y < m.size && !pair; ++y) {
        if (x != y && R.holds(x, y) && R.holds(y, x)) pair = std::vector<Element>{x, y};
      }
    }
    if (pair) {
      r.add_fails("relation.antisymmetric", *pair);
    } else {
      r.add_holds("relation.antisymmetric");
    }
  }
  if (c == ModelClass::rrs_with_zero) {
    if (m.zero) {
      r.append(check_zero_absorbing(m));
    } else {
      r.add_not_applicable("zero.absorbing", "model has no zero");
    }
  }
  return r;
}

bool belongs_to_class(const Model& m, ModelClass c) {
  switch (c) {
    case ModelClass::rrs:
      return is_rrs(m);
    case ModelClass::preordered_rrs:
      return is_preordered_rrs(m);
    case ModelClass::antisym_rrs:
      return is_rrs(m) && is_antisymmetric(m.rel);
    default:
      return class_report(m, c).all_hold();
  }
}

std::size_t default_size_cap(ModelClass c) {
  if (const char* env = std::getenv("RRS_MAX_SIZE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return std::min<std::size_t>(static_cast<std::size_t>(v), kMaxEnumerationSize);
    }
  }
  return c == ModelClass::pre_axioms_minus_g ? 3 : 4;
}

void for_each_model(const SearchSpec& spec, const ModelVisitor& visit,
                    const EnumerateOptions& options) {
  check_cap(spec, options);
  const Enumerator gen(spec, options.collapse_residuum_ties);
  const auto& shards = gen.shards();
  if (options.jobs <= 1 || shards.size() <= 1) {
    for (const Shard& s : shards) {
      if (!gen.run(s, visit)) return;
    }
    return;
  }

  // Workers fill per-shard buffers; this thread replays them in shard order,
  // so the stream is identical for any worker count.
  std::vector<std::vector<Model>> results(shards.size());
  std::vector<char> done(shards.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  const auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      std::vector<Model> buf;
      gen.run(shards[i], [&](const Model& m) {
        buf.push_back(m);
        return !stop.load();
      });
      {
        std::lock_guard lock(mu);
        results[i] = std::move(buf);
        done[i] = 1;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const unsigned jobs = std::min<unsigned>(options.jobs, static_cast<unsigned>(shards.size()));
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  for (std::size_t i = 0; i < shards.size() && !stop.load(); ++i) {
    std::vector<Model> batch;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i] != 0; });
      batch = std::move(results[i]);
    }
    for (const Model& m : batch) {
      if (!visit(m)) {
        stop.store(true);
        break;
      }
    }
  }
  stop.store(true);
  // Let workers that are still waiting on nothing drain out.
  for (auto& t : pool) t.join();
}

std::vector<Model> enumerate(const SearchSpec& spec, const EnumerateOptions& options) {
  std::vector<Model> out;
  for_each_model(
      spec,
      [&](const Model& m) {
        out.push_back(m);
        return true;
      },
      options);
  return out;
}

std::size_t count_models(const SearchSpec& spec, const EnumerateOptions& options) {
  check_cap(spec, options);
  const Enumerator gen(spec, options.collapse_residuum_ties);
  const auto& shards = gen.shards();
  std::atomic<std::size_t> total{0};
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    std::size_t local = 0;
    for (std::size_t i = next.fetch_add(1); i < shards.size(); i = next.fetch_add(1)) {
      gen.run(shards[i], [&](const Model&) {
        ++local;
        return true;
      });
    }
    total.fetch_add(local);
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return total.load();
}

}  // namespace rrs
