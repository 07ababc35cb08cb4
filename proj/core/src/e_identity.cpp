#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "indexed.hpp"
#include "iterid/dynamics.hpp"
#include "iterid/finite_group.hpp"

namespace iterid {

namespace {

constexpr std::uint64_t kMaxExhaustiveTuples = 400'000'000;

struct TailSummary {
  int first_fail = -1;
  int max_depth = 0;
  int argmax_x1 = -1;
  std::uint64_t reached = 0;
  std::vector<std::uint32_t> histogram;  // histogram[d] = #x1 with depth d
};

// Minimal d >= 1 with f^d(x) = e for every x, 0 where the orbit misses e.
// Reverse breadth-first search from the identity over the functional graph.
void depths_from_map(const std::vector<int>& f, int identity, std::vector<int>& depth) {
  const std::size_t n = f.size();
  std::vector<int> start(n + 1, 0);
  for (int y : f) ++start[static_cast<std::size_t>(y) + 1];
  for (std::size_t i = 0; i < n; ++i) start[i + 1] += start[i];
  std::vector<int> pre(n);
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (std::size_t x = 0; x < n; ++x) pre[static_cast<std::size_t>(fill[static_cast<std::size_t>(f[x])]++)] = static_cast<int>(x);

  depth.assign(n, 0);
  std::vector<int> queue;
  queue.reserve(n);
  const auto id = static_cast<std::size_t>(identity);
  for (int k = start[id]; k < start[id + 1]; ++k) {
    const int x = pre[static_cast<std::size_t>(k)];
    depth[static_cast<std::size_t>(x)] = 1;
    queue.push_back(x);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int y = queue[head];
    if (y == identity) continue;  // predecessors of e already have depth 1
    const auto yy = static_cast<std::size_t>(y);
    for (int k = start[yy]; k < start[yy + 1]; ++k) {
      const auto x = static_cast<std::size_t>(pre[static_cast<std::size_t>(k)]);
      if (depth[x] == 0) {
        depth[x] = depth[yy] + 1;
        queue.push_back(static_cast<int>(x));
      }
    }
  }
}

std::vector<int> decode_tail(std::uint64_t t, int length, int order) {
  std::vector<int> tail(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    tail[static_cast<std::size_t>(i)] = static_cast<int>(t % static_cast<std::uint64_t>(order));
    t /= static_cast<std::uint64_t>(order);
  }
  return tail;
}

std::vector<Element> tuple_elements(const FiniteGroup& fg, int x1, const std::vector<int>& tail) {
  std::vector<Element> out{fg.element(x1)};
  for (int t : tail) out.push_back(fg.element(t));
  return out;
}

IdentityVerdict exhaustive_check(const Word& w, const GroupPtr& gp, const CheckOptions& options) {
  if (!gp->is_finite()) throw std::domain_error("exhaustive mode needs a finite group; " + gp->name() + " is infinite");
  const FiniteGroup fg(gp);
  const int order = fg.order();
  const int tail_len = w.arity() - 1;
  std::uint64_t tails = 1;
  for (int i = 0; i < tail_len; ++i) {
    tails *= static_cast<std::uint64_t>(order);
    if (tails * static_cast<std::uint64_t>(order) > kMaxExhaustiveTuples) {
      throw std::domain_error("exhaustive search over " + gp->name() + " with " + std::to_string(w.arity()) +
                              " variables is too large; use sampled mode");
    }
  }

  std::vector<TailSummary> summaries(tails);
  detail::parallel_for(static_cast<std::int64_t>(tails), options.workers, [&](std::int64_t t) {
    detail::TailEvaluator phi(fg, w);
    const std::vector<int> tail = decode_tail(static_cast<std::uint64_t>(t), tail_len, order);
    phi.set_tail(tail);
    std::vector<int> f(static_cast<std::size_t>(order));
    for (int x = 0; x < order; ++x) f[static_cast<std::size_t>(x)] = phi(x);
    std::vector<int> depth;
    depths_from_map(f, fg.identity(), depth);
    TailSummary& s = summaries[static_cast<std::size_t>(t)];
    for (int x = 0; x < order; ++x) {
      const int d = depth[static_cast<std::size_t>(x)];
      if (d == 0) {
        if (s.first_fail < 0) s.first_fail = x;
        continue;
      }
      ++s.reached;
      if (s.histogram.size() <= static_cast<std::size_t>(d)) s.histogram.resize(static_cast<std::size_t>(d) + 1, 0);
      ++s.histogram[static_cast<std::size_t>(d)];
      if (d > s.max_depth) {
        s.max_depth = d;
        s.argmax_x1 = x;
      }
    }
  });

  IdentityVerdict v;
  v.exhaustive = true;
  v.certificate = "exhaustive";
  v.tuples_checked = tails * static_cast<std::uint64_t>(order);
  std::tuple<int, std::uint64_t> fail_key{-1, 0};
  std::tuple<int, std::uint64_t> best_key{-1, 0};
  for (std::uint64_t t = 0; t < tails; ++t) {
    const TailSummary& s = summaries[t];
    v.tuples_reached += s.reached;
    for (std::size_t d = 0; d < s.histogram.size(); ++d) {
      if (s.histogram[d] != 0) v.depth_histogram[static_cast<std::int64_t>(d)] += s.histogram[d];
    }
    if (s.first_fail >= 0 && (std::get<0>(fail_key) < 0 || std::make_tuple(s.first_fail, t) < fail_key)) {
      fail_key = {s.first_fail, t};
    }
    if (s.max_depth > v.max_depth_seen ||
        (s.max_depth == v.max_depth_seen && s.max_depth > 0 && std::make_tuple(s.argmax_x1, t) < best_key)) {
      v.max_depth_seen = s.max_depth;
      best_key = {s.argmax_x1, t};
    }
  }
  if (v.max_depth_seen > 0) {
    v.argmax_tuple = tuple_elements(fg, std::get<0>(best_key), decode_tail(std::get<1>(best_key), tail_len, order));
  }
  if (std::get<0>(fail_key) >= 0) {
    v.status = Status::kFails;
    std::vector<Element> tuple = tuple_elements(fg, std::get<0>(fail_key), decode_tail(std::get<1>(fail_key), tail_len, order));
    OrbitReport orbit = verbal_orbit(w, *gp, tuple[0], std::span<const Element>(tuple).subspan(1),
                                     static_cast<std::int64_t>(order) + 1);
    v.witness = Witness{std::move(tuple), std::move(orbit)};
  } else {
    v.status = Status::kHolds;
  }
  return v;
}

IdentityVerdict sampled_check(const Word& w, const GroupPtr& gp, const CheckOptions& options) {
  if (options.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
  const std::int64_t budget = options.budget > 0 ? options.budget : default_orbit_budget(*gp);
  struct Sample {
    std::vector<Element> tuple;
    OrbitReport orbit;
  };
  std::vector<Sample> samples(static_cast<std::size_t>(options.samples));
  detail::parallel_for(options.samples, options.workers, [&](std::int64_t i) {
    Sample& s = samples[static_cast<std::size_t>(i)];
    s.tuple = sample_tuple(*gp, w.arity(), options.seed, i, options.size_bound);
    s.orbit = verbal_orbit(w, *gp, s.tuple[0], std::span<const Element>(s.tuple).subspan(1), budget);
  });

  IdentityVerdict v;
  v.exhaustive = false;
  v.certificate = "sampled";
  v.status = Status::kInconclusive;
  v.tuples_checked = samples.size();
  for (auto& s : samples) {
    if (const auto d = s.orbit.depth()) {
      ++v.tuples_reached;
      ++v.depth_histogram[*d];
      if (*d > v.max_depth_seen) {
        v.max_depth_seen = *d;
        v.argmax_tuple = s.tuple;
      }
    } else if (s.orbit.enters_cycle()) {
      if (!v.witness) {
        v.status = Status::kFails;
        v.witness = Witness{s.tuple, s.orbit};
      }
    } else {
      ++v.tuples_exhausted;
    }
  }
  return v;
}

}  // namespace

IdentityVerdict check_e_identity(const Word& w, const GroupPtr& g, const CheckOptions& options) {
  if (options.mode == CheckMode::kExhaustive) return exhaustive_check(w, g, options);
  return sampled_check(w, g, options);
}

DepthReport depth_e(const Word& w, const GroupPtr& g, int workers) {
  CheckOptions options;
  options.mode = CheckMode::kExhaustive;
  options.workers = workers;
  DepthReport r;
  r.word = w;
  r.group = g->descriptor();
  r.verdict = check_e_identity(w, g, options);
  if (r.verdict.status == Status::kHolds) {
    r.s_value = r.verdict.max_depth_seen;
    r.argmax_tuple = r.verdict.argmax_tuple;
  } else {
    r.witness = r.verdict.witness;
  }
  return r;
}

}  // namespace iterid
