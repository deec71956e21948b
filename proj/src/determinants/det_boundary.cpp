#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>

#include "hyperdet/error.hpp"
#include "internal.hpp"

namespace hyperdet {

namespace {

using Policy = SumPolicy;

/// Everything about one boundary format that does not depend on sigma.
class BoundarySum {
 public:
  BoundarySum(const Format& base, const DetOptions& options)
      : space_(base, options.max_terms), policy_(options.policy), max_terms_(options.max_terms) {
    const std::size_t d = space_.arity();
    std::vector<int> dims = base.dims();
    dims.push_back(space_.mseq().back());
    local_ = Format(dims);
    strides_.assign(d + 1, 1);
    for (std::size_t k = d; k-- > 0;) strides_[k] = strides_[k + 1] * static_cast<std::size_t>(local_[k + 1]);
    if (local_.volume() >= (1ull << 32)) throw Error(ErrorKind::SizeGuard, "matrix too large");

    if (space_.sigma_order() > static_cast<double>(max_terms_))
      throw Error(ErrorKind::SizeGuard, "|Sigma| exceeds the term cap of " + std::to_string(max_terms_));
    for (const auto& c : space_.components()) {
      tables_.push_back(&detail::perm_table(space_.level(c.level).size()));
      radices_.push_back(tables_.back()->perms.size());
    }
    sigma_count_ = 1;
    for (auto r : radices_) sigma_count_ *= r;

    const auto& m = space_.mseq();
    bounds_.resize(d);
    for (std::size_t k = 1; k <= d; ++k)
      for (const auto& s : space_.level(k)) {
        std::vector<int> b;
        for (const auto& r : blocks(s, m[k], base[k - 1])) b.push_back(static_cast<int>(r.size()));
        bounds_[k - 1].push_back(std::move(b));
      }

    const Monomial diag = diagonal_monomial(base, DiagonalVariant::Boundary, max_terms_);
    for (const auto& [v, e] : diag.factors()) {
      std::size_t off = 0;
      for (std::size_t k = 0; k <= d; ++k) off += static_cast<std::size_t>(v[k] - 1) * strides_[k];
      for (std::uint32_t t = 0; t < e; ++t) diag_.push_back(static_cast<char32_t>(off));
    }
    std::sort(diag_.begin(), diag_.end());
    diag_monomial_ = diag;
  }

  const Format& local_format() const { return local_; }
  const QSpace& space() const { return space_; }
  const Monomial& diagonal() const { return diag_monomial_; }
  std::size_t sigma_count() const { return sigma_count_; }
  const std::u32string& diagonal_offsets() const { return diag_; }

  const std::vector<std::vector<int>>& maps_for(std::size_t k, const std::vector<int>& bound) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto key = std::make_pair(k, bound);
    auto it = map_cache_.find(key);
    if (it != map_cache_.end()) return it->second;
    // Maps P_{k-1} -> {1..n_k} under the fiber bounds, lexicographic.
    const int m_prev = space_.mseq()[k - 1];
    const int n_k = static_cast<int>(bound.size());
    std::vector<std::vector<int>> out;
    std::vector<int> g(static_cast<std::size_t>(m_prev), 1);
    std::vector<int> used(bound.size(), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == m_prev) {
        out.push_back(g);
        return;
      }
      for (int i = 1; i <= n_k; ++i) {
        if (used[i - 1] == bound[i - 1]) continue;
        ++used[i - 1];
        g[pos] = i;
        self(self, pos + 1);
        --used[i - 1];
      }
    };
    rec(rec, 0);
    return map_cache_.emplace(key, std::move(out)).first->second;
  }

  /// Calls emit(sign, sorted offsets) for every term generated by sigma indices
  /// in [begin, end). Returns false if the shared term budget ran out.
  template <class Emit>
  bool run(std::size_t begin, std::size_t end, std::atomic<std::size_t>& budget_used, Emit&& emit) const {
    const std::size_t d = space_.arity();
    const std::size_t nq = space_.size();
    std::vector<std::size_t> choice(radices_.size());
    {
      std::size_t rest = begin;
      for (std::size_t c = radices_.size(); c-- > 0;) {
        choice[c] = rest % radices_[c];
        rest /= radices_[c];
      }
    }
    std::vector<std::size_t> sq(nq);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> key_of(nq * d);  // (key, admissibility coord)
    std::vector<std::uint64_t> keys;
    std::vector<std::uint32_t> slot_of(nq * d);
    std::vector<std::vector<int>> slot_bound;
    std::vector<std::size_t> slot_level;
    std::vector<const std::vector<std::vector<int>>*> slot_maps;
    std::vector<std::size_t> pick;
    std::u32string offsets(nq, 0);
    std::size_t local_terms = 0;

    for (std::size_t s = begin; s < end; ++s) {
      int sign = 1;
      for (std::size_t c = 0; c < choice.size(); ++c) sign *= tables_[c]->signs[choice[c]];
      for (std::size_t q = 0; q < nq; ++q) {
        std::size_t img = 0;
        std::size_t radix = 1;
        for (std::size_t k = 1; k <= d; ++k) {
          const std::size_t c = space_.component_of(q, k);
          img += tables_[c]->perms[choice[c]][space_.coord(q, k)] * radix;
          radix *= space_.level(k).size();
        }
        sq[q] = img;
      }
      keys.clear();
      for (std::size_t q = 0; q < nq; ++q)
        for (std::size_t k = 1; k <= d; ++k) {
          const std::size_t src = policy_.gamma_key == Policy::GammaKey::TailOfSigmaQ ? sq[q] : q;
          const std::size_t lvl = policy_.level_offset == Policy::LevelOffset::Shifted ? k - 1 : k;
          const std::uint64_t key = (static_cast<std::uint64_t>(k) << 56) |
                                    (static_cast<std::uint64_t>(space_.tail_index(src, lvl)) << 16) |
                                    static_cast<std::uint64_t>(space_.l(q, lvl));
          const std::size_t adm = policy_.admissible == Policy::Source::SigmaQ ? sq[q] : q;
          key_of[q * d + k - 1] = {key, space_.coord(adm, k)};
          keys.push_back(key);
        }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      slot_bound.assign(keys.size(), {});
      slot_level.assign(keys.size(), 0);
      for (std::size_t i = 0; i < nq * d; ++i) {
        const auto [key, coord] = key_of[i];
        const auto slot = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
        slot_of[i] = slot;
        const std::size_t k = i % d + 1;
        const auto& b = bounds_[k - 1][coord];
        auto& sb = slot_bound[slot];
        if (sb.empty()) {
          sb = b;
          slot_level[slot] = k;
        } else {
          for (std::size_t t = 0; t < sb.size(); ++t) sb[t] = std::min(sb[t], b[t]);
        }
      }
      slot_maps.clear();
      bool empty = false;
      for (std::size_t t = 0; t < keys.size(); ++t) {
        slot_maps.push_back(&maps_for(slot_level[t], slot_bound[t]));
        empty = empty || slot_maps.back()->empty();
      }

      if (!empty) {
        pick.assign(keys.size(), 0);
        while (true) {
          for (std::size_t q = 0; q < nq; ++q) {
            std::size_t off = static_cast<std::size_t>(space_.path(q, d) - 1) * strides_[d];
            for (std::size_t k = 1; k <= d; ++k) {
              const auto slot = slot_of[q * d + k - 1];
              const int i = (*slot_maps[slot])[pick[slot]][static_cast<std::size_t>(space_.path(q, k - 1) - 1)];
              off += static_cast<std::size_t>(i - 1) * strides_[k - 1];
            }
            offsets[q] = static_cast<char32_t>(off);
          }
          std::sort(offsets.begin(), offsets.end());
          emit(sign, offsets);
          if (++local_terms % 4096 == 0 && budget_used.fetch_add(4096) + 4096 > max_terms_) return false;
          std::size_t t = keys.size();
          while (t > 0 && ++pick[t - 1] == slot_maps[t - 1]->size()) pick[--t] = 0;
          if (t == 0) break;
        }
      }

      for (std::size_t c = choice.size(); c-- > 0;) {
        if (++choice[c] < radices_[c]) break;
        choice[c] = 0;
      }
    }
    return budget_used.fetch_add(local_terms % 4096) + local_terms % 4096 <= max_terms_;
  }

 private:
  QSpace space_;
  Policy policy_;
  std::size_t max_terms_;
  Format local_;
  std::vector<std::size_t> strides_;
  std::vector<const detail::PermTable*> tables_;
  std::vector<std::size_t> radices_;
  std::size_t sigma_count_ = 1;
  std::vector<std::vector<std::vector<int>>> bounds_;
  std::u32string diag_;
  Monomial diag_monomial_;
  mutable std::map<std::pair<std::size_t, std::vector<int>>, std::vector<std::vector<int>>> map_cache_;
  mutable std::mutex cache_mutex_;

};

struct LocalBoundary {
  MDMatrix local;  // reduced, distinguished direction last
  Format base;
};

LocalBoundary localize(const MDMatrix& a) {
  const MDMatrix r = a.reduced();
  std::size_t pos = 0;
  const Format base = boundary_base(a.format(), &pos);
  return {detail::move_axis_last(r, pos), base};
}

template <class Worker>
void parallel_over_sigma(const BoundarySum& sum, unsigned threads, std::vector<Worker>& workers) {
  const std::size_t total = sum.sigma_count();
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, total));
  workers.resize(t);
  std::atomic<std::size_t> used{0};
  std::atomic<bool> overflow{false};
  auto job = [&](std::size_t w) {
    const std::size_t begin = total * w / t, end = total * (w + 1) / t;
    if (!sum.run(begin, end, used, [&](int sign, const std::u32string& mono) { workers[w](sign, mono); }))
      overflow = true;
  };
  if (t == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < t; ++w) pool.emplace_back(job, w);
    for (auto& th : pool) th.join();
  }
  if (overflow) throw Error(ErrorKind::SizeGuard, "boundary sum generates more than the term cap");
}

struct CountSink {
  std::size_t terms = 0;
  void operator()(int, const std::u32string&) { ++terms; }
};

struct SymbolicSink {
  std::unordered_map<std::u32string, long long> terms;
  void operator()(int sign, const std::u32string& mono) { terms[mono] += sign; }
};

struct NumericSink {
  const std::vector<Integer>* values = nullptr;
  const std::u32string* diagonal = nullptr;
  Integer sum = 0;
  long long diagonal_coeff = 0;
  Integer prod;
  void operator()(int sign, const std::u32string& mono) {
    prod = (*values)[mono[0]];
    for (std::size_t i = 1; i < mono.size(); ++i) prod *= (*values)[mono[i]];
    if (sign > 0) sum += prod;
    else sum -= prod;
    if (mono == *diagonal) diagonal_coeff += sign;
  }
};

}  // namespace

std::size_t degree_boundary(const Format& f) {
  if (f.reduced().arity() == 0) return 1;
  return count_C(boundary_base(f));
}

std::size_t boundary_term_count(const Format& f, const DetOptions& options) {
  const BoundarySum sum(boundary_base(f), options);
  std::vector<CountSink> workers;
  parallel_over_sigma(sum, options.threads, workers);
  std::size_t total = 0;
  for (const auto& w : workers) total += w.terms;
  return total;
}

DetResult det_boundary(const MDMatrix& a, const DetOptions& options) {
  const LocalBoundary lb = localize(a);
  const BoundarySum sum(lb.base, options);
  const MDMatrix shape = MDMatrix::symbolic(sum.local_format());

  DetResult out;
  out.format = a.format();
  out.method = DetMethod::Boundary;
  if (lb.local.is_symbolic()) {
    std::vector<SymbolicSink> workers;
    parallel_over_sigma(sum, options.threads, workers);
    for (std::size_t w = 1; w < workers.size(); ++w)
      for (const auto& [mono, c] : workers[w].terms) workers[0].terms[mono] += c;
    std::vector<Term> terms;
    for (const auto& [mono, c] : workers[0].terms) {
      if (c == 0) continue;
      std::vector<Monomial::Factor> f;
      for (char32_t off : mono) f.emplace_back(EntryVar(shape.index_of(off)), 1u);
      terms.push_back({Monomial::from_factors(std::move(f)), Integer(static_cast<long>(c))});
    }
    Polynomial raw = Polynomial::from_terms(std::move(terms));
    detail::normalize(raw, sum.diagonal(), out.normalization);
    out.polynomial = detail::relabel(raw, lb.local);
    return out;
  }

  Integer scale;
  const std::vector<Integer> values = detail::clear_denominators(lb.local.values(), scale);
  std::vector<NumericSink> workers;
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, sum.sigma_count()));
  workers.resize(t);
  for (auto& w : workers) {
    w.values = &values;
    w.diagonal = &sum.diagonal_offsets();
  }
  parallel_over_sigma(sum, options.threads, workers);
  Integer raw = 0;
  long long diag = 0;
  for (const auto& w : workers) {
    raw += w.sum;
    diag += w.diagonal_coeff;
  }
  if (diag == 0)
    throw Error(ErrorKind::CalibrationFailure,
                "policy " + to_string(options.policy) + " gives no diagonal monomial; the value cannot be normalized");
  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(sum.space().size()));
  denom *= Integer(static_cast<long>(diag));
  Rational value(raw, denom);
  value.canonicalize();
  out.value = value;
  out.normalization.sign = diag < 0 ? -1 : 1;
  out.normalization.content = Integer(static_cast<long>(diag < 0 ? -diag : diag));
  out.normalization.anchor = sum.diagonal().to_string();
  return out;
}

}  // namespace hyperdet
