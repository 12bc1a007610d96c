#include "descq/enumerate.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace descq {

namespace {

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Elem> tuple_of_index(size_t idx, int arity, int n) {
  std::vector<Elem> t(arity);
  for (int i = arity - 1; i >= 0; --i) {
    t[i] = static_cast<Elem>(idx % n);
    idx /= n;
  }
  return t;
}

}  // namespace

StructureEnumerator::StructureEnumerator(Signature sig, int max_outer)
    : sig_(std::move(sig)), max_outer_(max_outer) {
  if (max_outer_ < 1) throw std::invalid_argument("max_outer must be >= 1");
  sig_.validate();
  start_size(1);
}

void StructureEnumerator::start_size(int n) {
  n_ = n;
  digits_.clear();
  radix_.clear();
  // inner membership bits
  for (int i = 0; i < n; ++i) radix_.push_back(2);
  // constants
  for (size_t i = 0; i < sig_.constants.size(); ++i) radix_.push_back(n);
  // predicate extension bits
  for (const auto& [p, k] : sig_.predicates) {
    long long cells = ipow(n, k);
    for (long long i = 0; i < cells; ++i) radix_.push_back(2);
  }
  // function table entries
  for (const auto& [f, k] : sig_.functions) {
    long long cells = ipow(n, k);
    for (long long i = 0; i < cells; ++i) radix_.push_back(n);
  }
  digits_.assign(radix_.size(), 0);
}

bool StructureEnumerator::bump() {
  for (size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < radix_[i]) return true;
    digits_[i] = 0;
  }
  return false;
}

Structure StructureEnumerator::build() const {
  Structure m;
  m.outer_size = n_;
  size_t pos = 0;
  for (int i = 0; i < n_; ++i)
    if (digits_[pos++]) m.inner.insert(i);
  for (const auto& c : sig_.constants) m.const_den[c] = digits_[pos++];
  for (const auto& [p, k] : sig_.predicates) {
    long long cells = ipow(n_, k);
    auto& ext = m.pred_ext[p];
    for (long long i = 0; i < cells; ++i)
      if (digits_[pos++]) ext.insert(tuple_of_index(static_cast<size_t>(i), k, n_));
  }
  for (const auto& [f, k] : sig_.functions) {
    long long cells = ipow(n_, k);
    auto& table = m.func_den[f];
    table.reserve(static_cast<size_t>(cells));
    for (long long i = 0; i < cells; ++i) table.push_back(digits_[pos++]);
  }
  return m;
}

std::optional<Structure> StructureEnumerator::next() {
  if (done_) return std::nullopt;
  if (n_ == 0) start_size(1);
  Structure m = build();
  if (!bump()) {
    if (n_ + 1 > max_outer_)
      done_ = true;
    else
      start_size(n_ + 1);
  }
  return m;
}

long long structure_count(const Signature& sig, int n) {
  long long total = ipow(2, n);  // inner domains
  for (size_t i = 0; i < sig.constants.size(); ++i) total *= n;
  for (const auto& [p, k] : sig.predicates) total *= ipow(2, ipow(n, k));
  for (const auto& [f, k] : sig.functions) total *= ipow(n, ipow(n, k));
  return total;
}

namespace {

// All assignments of the given variables over {0..n-1}, tested against q.
std::optional<Assignment> falsifying_assignment(const Structure& m, const Sequent& q,
                                                const std::vector<std::string>& vars) {
  std::vector<Elem> vals(vars.size(), 0);
  while (true) {
    Assignment s;
    for (size_t i = 0; i < vars.size(); ++i) s.map[vars[i]] = vals[i];
    if (!satisfies_sequent(m, s, q)) return s;
    bool carried = true;
    for (size_t i = vals.size(); i-- > 0;) {
      if (++vals[i] < m.outer_size) {
        carried = false;
        break;
      }
      vals[i] = 0;
    }
    if (carried) return std::nullopt;
  }
}

}  // namespace

std::optional<Countermodel> find_countermodel(const Sequent& q, const Signature& sig,
                                              int max_outer, int jobs) {
  std::set<std::string> fv = free_vars(q);
  std::vector<std::string> vars(fv.begin(), fv.end());
  if (jobs <= 1) {
    StructureEnumerator en(sig, max_outer);
    while (auto m = en.next()) {
      if (auto s = falsifying_assignment(*m, q, vars))
        return Countermodel{std::move(*m), std::move(*s)};
    }
    return std::nullopt;
  }
  std::atomic<bool> found{false};
  std::mutex mu;
  std::optional<Countermodel> result;
  std::vector<std::thread> pool;
  for (int r = 0; r < jobs; ++r) {
    pool.emplace_back([&, r]() {
      StructureEnumerator en(sig, max_outer);
      long long idx = 0;
      while (!found.load(std::memory_order_relaxed)) {
        auto m = en.next();
        if (!m) break;
        if (idx++ % jobs != r) continue;
        if (auto s = falsifying_assignment(*m, q, vars)) {
          std::lock_guard<std::mutex> lk(mu);
          if (!result) result = Countermodel{std::move(*m), std::move(*s)};
          found.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  return result;
}

std::optional<Countermodel> find_countermodel(const Formula& a, const Signature& sig,
                                              int max_outer, int jobs) {
  Sequent q;
  q.succ.push_back(a);
  return find_countermodel(q, sig, max_outer, jobs);
}

}  // namespace descq
