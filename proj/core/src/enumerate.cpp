#include "deltaknot/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace dk {
namespace {

// Grows maps dart by dart inside explicit disk regions, so every completed
// matching is planar by construction. Each region lists its unmatched darts
// in boundary order; matching the first unmatched dart to another dart of
// its region splits the disk in two, and attaching a fresh vertex splices
// the new darts into the boundary.
class Builder {
public:
  Builder(int n, std::vector<ShadowProjection>* out) : n_(n), out_(out) {
    theta_.assign(6 * n, -1);
    regions_.push_back({0, 1, 2, 3, 4, 5});
    used_ = 1;
  }

  void run() { rec(); }

private:
  int n_;
  std::vector<ShadowProjection>* out_;
  std::vector<int> theta_;
  std::vector<std::vector<int>> regions_;
  int used_ = 0;

  void rec() {
    int d = -1;
    for (int i = 0; i < 6 * used_; ++i) {
      if (theta_[i] < 0) {
        d = i;
        break;
      }
    }
    if (d < 0) {
      if (used_ == n_) emit();
      return;
    }
    int r = -1;
    size_t pos = 0;
    for (size_t i = 0; i < regions_.size() && r < 0; ++i) {
      for (size_t j = 0; j < regions_[i].size(); ++j) {
        if (regions_[i][j] == d) {
          r = static_cast<int>(i);
          pos = j;
          break;
        }
      }
    }
    std::vector<int> cyc(regions_[r].begin() + pos, regions_[r].end());
    cyc.insert(cyc.end(), regions_[r].begin(), regions_[r].begin() + pos);

    auto saved = regions_;
    for (size_t j = 1; j < cyc.size(); ++j) {
      int e = cyc[j];
      theta_[d] = e;
      theta_[e] = d;
      regions_.erase(regions_.begin() + r);
      std::vector<int> left(cyc.begin() + 1, cyc.begin() + j);
      std::vector<int> right(cyc.begin() + j + 1, cyc.end());
      if (!left.empty()) regions_.push_back(std::move(left));
      if (!right.empty()) regions_.push_back(std::move(right));
      rec();
      regions_ = saved;
      theta_[d] = theta_[e] = -1;
    }

    if (used_ < n_) {
      int v = used_++;
      theta_[d] = 6 * v;
      theta_[6 * v] = d;
      std::vector<int> merged;
      for (int s = 1; s <= 5; ++s) merged.push_back(6 * v + s);
      merged.insert(merged.end(), cyc.begin() + 1, cyc.end());
      regions_[r] = std::move(merged);
      rec();
      regions_ = saved;
      theta_[d] = theta_[6 * v] = -1;
      --used_;
    }
  }

  void emit() {
    if (!prime()) return;
    std::vector<std::array<int, 6>> verts(n_);
    int next = 1;
    std::vector<int> arc(6 * n_, 0);
    for (int i = 0; i < 6 * n_; ++i) {
      if (arc[i] == 0) {
        arc[i] = arc[theta_[i]] = next++;
      }
    }
    for (int i = 0; i < 6 * n_; ++i) verts[i / 6][i % 6] = arc[i];
    out_->push_back(ShadowProjection(std::move(verts)));
  }

  // No two edges disconnect the vertex set: removing any edge pair must
  // leave all vertices mutually reachable.
  bool prime() const {
    if (n_ <= 1) return true;
    std::vector<int> lo_dart;
    for (int i = 0; i < 6 * n_; ++i) {
      if (i < theta_[i]) lo_dart.push_back(i);
    }
    int m = static_cast<int>(lo_dart.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int s = 0; s < 6; ++s) {
            int dart = 6 * v + s;
            int lo = std::min(dart, theta_[dart]);
            if (lo == lo_dart[a] || lo == lo_dart[b]) continue;
            int w = theta_[dart] / 6;
            if (!seen[w]) {
              seen[w] = 1;
              ++reached;
              stack.push_back(w);
            }
          }
        }
        if (reached != n_) return false;
      }
    }
    return true;
  }
};

}  // namespace

std::vector<ShadowProjection> enumerate_projections(int n) {
  std::vector<ShadowProjection> raw;
  Builder(n, &raw).run();
  std::map<std::string, ShadowProjection> dedup;
  for (auto& p : raw) dedup.emplace(p.canonical_key(true), p);
  std::vector<ShadowProjection> out;
  out.reserve(dedup.size());
  for (auto& [key, p] : dedup) out.push_back(std::move(p));
  return out;
}

std::vector<ShadowProjection> filter_knot_projections(
    const std::vector<ShadowProjection>& projections) {
  std::vector<ShadowProjection> out;
  for (const auto& p : projections) {
    if (p.strand_components() == 1) out.push_back(p);
  }
  return out;
}

}  // namespace dk
