#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <random>
#include <vector>

#include "tropmod/errors.hpp"

namespace tropmod {

/// Cells with dimensions and codimension-1 faces counted with multiplicity.
/// Both the generalized simplicial complexes and the CW complexes reduce to
/// this for collapsibility searches.
struct FaceComplex {
  std::vector<int> dim;                                  // per cell
  std::vector<std::vector<std::pair<int, int>>> facets;  // cell -> (face, multiplicity)
};

struct CollapseStep {
  int free_face;
  int coface;
};

/// Verified sequence of elementary collapses down to one vertex, or verdict
/// "unknown".  Never claims collapsibility without a replayable sequence.
struct CollapseCertificate {
  bool collapsible = false;
  std::vector<CollapseStep> steps;
  int surviving_vertex = -1;
  unsigned seed_used = 0;
  int restarts_used = 0;
};

namespace detail {

/// Incremental free-pair bookkeeping: coface incidence totals per cell plus
/// the inverted facet lists, so removing a pair touches only its neighbors.
struct CollapseState {
  const FaceComplex& fc;
  std::vector<std::vector<std::pair<int, int>>> cofaces;  // cell -> (coface, mult)
  std::vector<char> alive;
  std::vector<int> coface_mult;
  int living;

  explicit CollapseState(const FaceComplex& f)
      : fc(f), cofaces(f.dim.size()), alive(f.dim.size(), 1), coface_mult(f.dim.size(), 0),
        living(static_cast<int>(f.dim.size())) {
    for (size_t c = 0; c < f.dim.size(); ++c)
      for (auto [t, m] : f.facets[c]) {
        coface_mult[t] += m;
        cofaces[t].emplace_back(static_cast<int>(c), m);
      }
  }

  bool is_free(int cell) const { return alive[cell] && coface_mult[cell] == 1; }

  /// The unique living coface of a free face (multiplicity one by
  /// construction).
  int sole_coface(int cell) const {
    for (auto [c, m] : cofaces[cell])
      if (alive[c]) return c;
    return -1;
  }

  /// Remove a cell; returns the faces whose incidence count changed.
  std::vector<int> remove(int cell) {
    alive[cell] = 0;
    --living;
    std::vector<int> touched;
    for (auto [t, m] : fc.facets[cell]) {
      coface_mult[t] -= m;
      touched.push_back(t);
    }
    return touched;
  }
};

}  // namespace detail

/// Replay the certificate against the complex; true iff each step removes a
/// genuine free pair and a single vertex survives.
inline bool replay_certificate(const FaceComplex& fc, const CollapseCertificate& cert) {
  if (!cert.collapsible) return false;
  detail::CollapseState st(fc);
  for (const CollapseStep& s : cert.steps) {
    if (!st.alive[s.free_face] || !st.alive[s.coface]) return false;
    if (st.coface_mult[s.free_face] != 1) return false;
    if (fc.dim[s.coface] != fc.dim[s.free_face] + 1) return false;
    int mult = 0;
    for (auto [t, m] : fc.facets[s.coface])
      if (t == s.free_face) mult += m;
    if (mult != 1) return false;
    st.remove(s.coface);
    st.remove(s.free_face);
  }
  return st.living == 1 && st.alive[cert.surviving_vertex] &&
         fc.dim[cert.surviving_vertex] == 0;
}

namespace detail {

/// One greedy elimination pass with a fixed step cap.
inline CollapseCertificate collapse_restart(const FaceComplex& fc, unsigned seed, int restart,
                                            long long step_cap) {
  std::mt19937 rng(seed + 0x9e3779b9u * static_cast<unsigned>(restart));
  int max_dim = *std::max_element(fc.dim.begin(), fc.dim.end());
  CollapseState st(fc);
  CollapseCertificate cert;
  cert.seed_used = seed;
  cert.restarts_used = restart + 1;

  // free faces bucketed by coface dimension, with lazy deletion
  std::vector<std::vector<int>> buckets(max_dim + 1);
  auto enqueue = [&](int cell) {
    if (!st.is_free(cell)) return;
    int c = st.sole_coface(cell);
    if (c != -1) buckets[fc.dim[c]].push_back(cell);
  };
  for (size_t c = 0; c < fc.dim.size(); ++c) enqueue(static_cast<int>(c));

  long long spent = 0;
  while (spent < step_cap && st.living > 1) {
    int face = -1, coface = -1;
    for (int d = max_dim; d >= 1 && face == -1; --d) {
      auto& bucket = buckets[d];
      while (!bucket.empty()) {
        std::uniform_int_distribution<size_t> pick(0, bucket.size() - 1);
        size_t i = pick(rng);
        int cand = bucket[i];
        bucket[i] = bucket.back();
        bucket.pop_back();
        if (!st.is_free(cand)) continue;  // stale entry
        int c = st.sole_coface(cand);
        if (fc.dim[c] != d) {  // stale bucket, refile
          buckets[fc.dim[c]].push_back(cand);
          continue;
        }
        face = cand;
        coface = c;
        break;
      }
    }
    if (face == -1) break;
    ++spent;
    cert.steps.push_back({face, coface});
    for (int t : st.remove(coface)) enqueue(t);
    for (int t : st.remove(face)) enqueue(t);
  }

  if (st.living == 1) {
    for (size_t c = 0; c < fc.dim.size(); ++c)
      if (st.alive[c]) cert.surviving_vertex = static_cast<int>(c);
    if (fc.dim[cert.surviving_vertex] == 0) cert.collapsible = true;
  }
  return cert;
}

}  // namespace detail

/// Greedy free-face elimination preferring top-dimensional cofaces, with
/// seeded randomized restarts.  Returns a replay-verified certificate or
/// verdict unknown once the step budget is exhausted.  Restarts may run in
/// parallel; the result is the lowest-numbered successful restart, so it is
/// independent of the thread schedule.
inline CollapseCertificate collapse_search(const FaceComplex& fc, unsigned seed = 0,
                                           long long budget = 2000000, int restarts = 32,
                                           int threads = 1) {
  CollapseCertificate unknown;
  if (fc.dim.empty()) return unknown;
  long long step_cap =
      std::max<long long>(budget / std::max(restarts, 1), static_cast<long long>(fc.dim.size()));
  for (int base = 0; base < restarts; base += std::max(threads, 1)) {
    int batch = std::min(std::max(threads, 1), restarts - base);
    std::vector<std::future<CollapseCertificate>> futures;
    for (int i = 1; i < batch; ++i)
      futures.push_back(std::async(std::launch::async, detail::collapse_restart, std::cref(fc),
                                   seed, base + i, step_cap));
    std::vector<CollapseCertificate> results;
    results.push_back(detail::collapse_restart(fc, seed, base, step_cap));
    for (auto& f : futures) results.push_back(f.get());
    for (CollapseCertificate& cert : results) {
      if (!cert.collapsible) continue;
      if (!replay_certificate(fc, cert))
        throw InternalCheckFailure("collapse certificate failed replay");
      return cert;
    }
  }
  return unknown;
}

}  // namespace tropmod
