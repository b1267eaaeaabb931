#include "placement_search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace wallin::detail {

LeafCollector::LeafCollector(LeafOrder order, std::optional<std::size_t> capacity)
    : order_(order), capacity_(capacity) {}

bool LeafCollector::less(const Leaf& a, const Leaf& b) const {
  if (order_ == LeafOrder::objective) {
    if (a.score.combined() != b.score.combined()) return a.score.combined() < b.score.combined();
    if (a.score.vertical_px != b.score.vertical_px) return a.score.vertical_px < b.score.vertical_px;
    if (a.score.horizontal_px != b.score.horizontal_px) {
      return a.score.horizontal_px < b.score.horizontal_px;
    }
  }
  // Candidate lists are stored in (y,x) order, so index order is position order.
  return a.choice < b.choice;
}

void LeafCollector::push(Leaf leaf) {
  auto cmp = [this](const Leaf& a, const Leaf& b) { return less(a, b); };
  if (!capacity_) {
    heap_.push_back(std::move(leaf));
    return;
  }
  if (*capacity_ == 0) return;
  if (heap_.size() < *capacity_) {
    heap_.push_back(std::move(leaf));
    std::push_heap(heap_.begin(), heap_.end(), cmp);
  } else if (less(leaf, heap_.front())) {
    std::pop_heap(heap_.begin(), heap_.end(), cmp);
    heap_.back() = std::move(leaf);
    std::push_heap(heap_.begin(), heap_.end(), cmp);
  }
}

std::optional<int> LeafCollector::score_cutoff() const {
  if (order_ != LeafOrder::objective || !capacity_ || *capacity_ == 0 || heap_.size() < *capacity_) {
    return std::nullopt;
  }
  return heap_.front().score.combined();
}

void LeafCollector::merge(LeafCollector&& other) {
  for (auto& leaf : other.heap_) push(std::move(leaf));
  other.heap_.clear();
}

std::vector<Leaf> LeafCollector::take() && {
  std::sort(heap_.begin(), heap_.end(), [this](const Leaf& a, const Leaf& b) { return less(a, b); });
  if (capacity_ && heap_.size() > *capacity_) heap_.resize(*capacity_);
  return std::move(heap_);
}

SearchModel::SearchModel(const WallProblem& p) : problem(&p), index(p) {
  for (const auto& inst : p.instances) {
    const BuildingTypeSpec& spec = p.type_of(inst);
    types.push_back(&spec);
    auto& orig = origins.emplace_back();
    auto& occ = cells.emplace_back();
    for (TileCoord origin : p.candidates(inst)) {
      orig.push_back(origin);
      auto& list = occ.emplace_back();
      for (TileCoord t : footprint(spec, origin)) {
        int c = index.cell(t);
        if (c >= 0 && index.walkable(c)) list.push_back(c);
      }
    }
  }

  int total = 0;
  for (const auto& per_inst : cells) {
    offset.push_back(total);
    total += static_cast<int>(per_inst.size());
  }
  const std::size_t words = (static_cast<std::size_t>(total) + 63) / 64;
  conflicts.assign(static_cast<std::size_t>(total), std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::pair<int, int>>> users(static_cast<std::size_t>(index.size()));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t k = 0; k < cells[i].size(); ++k) {
      for (int c : cells[i][k]) users[c].emplace_back(static_cast<int>(i), offset[i] + static_cast<int>(k));
    }
  }
  for (const auto& here : users) {
    for (auto [ia, a] : here) {
      for (auto [ib, b] : here) {
        if (ia != ib) conflicts[a][b >> 6] |= std::uint64_t{1} << (b & 63);
      }
    }
  }

  for (std::size_t i = 0; i < types.size(); ++i) {
    const BuildingTypeSpec& a = *types[i];
    int lowest = 0;
    for (std::size_t j = 0; j < types.size(); ++j) {
      if (j == i) continue;
      const BuildingTypeSpec& b = *types[j];
      lowest = std::min({lowest, a.right_gap + b.left_gap, b.right_gap + a.left_gap,
                         a.bottom_gap + b.top_gap, b.bottom_gap + a.top_gap});
    }
    // Each boundary edge yields a seam in both directions.
    seam_floor.push_back(2 * (a.width + a.height) * 2 * lowest);
  }
}

Assignment SearchModel::to_assignment(const std::vector<int>& choice) const {
  Assignment a;
  for (std::size_t i = 0; i < choice.size(); ++i) {
    a.placements.emplace(problem->instances[i].name, origins[i][choice[i]]);
  }
  return a;
}

namespace {

using Domains = std::vector<std::vector<int>>;

struct Child {
  int inst;
  int cand;
  Domains domains;
};

class Worker {
 public:
  Worker(const SearchModel& model, const SearchOptions& opts, LeafCollector& out)
      : m_(model), opts_(opts), out_(out), n_(static_cast<int>(model.types.size())) {
    const auto size = static_cast<std::size_t>(m_.index.size());
    placement_.assign(n_, -1);
    count_.assign(size, 0);
    owner_.assign(size, -1);
    blocked_.assign(size, 0);
    h_squeeze_.assign(size, 0);
    v_squeeze_.assign(size, 0);
    bound_blocked_.assign(size, 0);
    cover_.assign(size, 0);
    on_path_.assign(size, 0);
  }

  void place(int inst, int cand) {
    placement_[inst] = cand;
    for (int c : m_.cells[inst][cand]) {
      if (count_[c]++ == 0) blocked_[c] = 1;
    }
  }

  void unplace(int inst) {
    for (int c : m_.cells[inst][placement_[inst]]) {
      if (--count_[c] == 0) blocked_[c] = 0;
    }
    placement_[inst] = -1;
  }

  void dfs(const Domains& domains) {
    if (auto cutoff = out_.score_cutoff(); cutoff && score_floor() > *cutoff) return;
    if (std::find(placement_.begin(), placement_.end(), -1) == placement_.end()) {
      leaf();
      return;
    }
    for (const Child& ch : expand(domains)) {
      place(ch.inst, ch.cand);
      dfs(ch.domains);
      unplace(ch.inst);
    }
  }

  std::vector<Child> expand(const Domains& domains) {
    std::vector<int> order;
    for (int i = 0; i < n_; ++i) {
      if (placement_[i] < 0) order.push_back(i);
    }
    if (opts_.order_by_domain) {
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return domains[a].size() < domains[b].size(); });
    }

    std::vector<Child> out;
    if (opts_.path_cut) {
      if (!coverage_can_seal(domains, order)) return out;
      if (find_open_path()) {
        // Some remaining building must land on the path. Branch on which one
        // is the first (in `order`) to do so; earlier ones are then confined
        // to candidates that miss it, which keeps the branches disjoint.
        Domains restricted = domains;
        for (int r : order) {
          std::vector<int> miss;
          for (int k : restricted[r]) {
            if (touches_path(r, k)) {
              add_child(restricted, order, r, k, out);
            } else {
              miss.push_back(k);
            }
          }
          restricted[r] = std::move(miss);
          if (restricted[r].empty()) break;
        }
        clear_path();
        return out;
      }
    }
    int r = order.front();
    for (int k : domains[r]) add_child(domains, order, r, k, out);
    return out;
  }

  void leaf() {
    for (int i = 0; i < n_; ++i) {
      for (int c : m_.cells[i][placement_[i]]) {
        if (count_[c] > 1) return;
        owner_[c] = i;
      }
    }

    const WallProblem& p = *m_.problem;
    Score score;
    for (int i = 0; i < n_; ++i) {
      const BuildingTypeSpec& ti = *m_.types[i];
      for (int c : m_.cells[i][placement_[i]]) {
        for (int d : {kNorth, kSouth, kWest, kEast}) {
          int nb = m_.index.neighbor(c, d);
          if (nb < 0 || count_[nb] == 0 || owner_[nb] == i) continue;
          const BuildingTypeSpec& tj = *m_.types[owner_[nb]];
          switch (d) {
            case kEast:
            case kWest: {
              int w = d == kEast ? ti.right_gap + tj.left_gap : tj.right_gap + ti.left_gap;
              score.horizontal_px += w;
              if (w >= p.enemy_width_px) h_squeeze_[c] = 1;
              break;
            }
            default: {
              int w = d == kSouth ? ti.bottom_gap + tj.top_gap : tj.bottom_gap + ti.top_gap;
              score.vertical_px += w;
              if (w >= p.enemy_height_px) v_squeeze_[c] = 1;
              break;
            }
          }
        }
      }
    }

    auto cutoff = out_.score_cutoff();
    bool tight = false;
    if (!cutoff || score.combined() <= *cutoff) {
      reach_dense(m_.index, {blocked_, h_squeeze_, v_squeeze_}, p.reach_mode, m_.index.outside_cell(),
                  reached_, work_, m_.index.inside_cell());
      int inside = m_.index.inside_cell();
      tight = inside < 0 || !reached_[inside];
    }
    for (int i = 0; i < n_; ++i) {
      for (int c : m_.cells[i][placement_[i]]) h_squeeze_[c] = v_squeeze_[c] = 0;
    }
    if (tight) out_.push({placement_, score});
  }

 private:
  // Lower bound on the combined score of any completion: seams already fixed
  // between placed buildings plus the floor of every unplaced one.
  int score_floor() {
    int total = 0;
    for (int i = 0; i < n_; ++i) {
      if (placement_[i] < 0) {
        total += m_.seam_floor[i];
        continue;
      }
      for (int c : m_.cells[i][placement_[i]]) {
        if (count_[c] > 1) return INT_MIN;
        owner_[c] = i;
      }
    }
    for (int i = 0; i < n_; ++i) {
      if (placement_[i] < 0) continue;
      const BuildingTypeSpec& ti = *m_.types[i];
      for (int c : m_.cells[i][placement_[i]]) {
        for (int d : {kNorth, kSouth, kWest, kEast}) {
          int nb = m_.index.neighbor(c, d);
          if (nb < 0 || count_[nb] == 0 || owner_[nb] == i) continue;
          const BuildingTypeSpec& tj = *m_.types[owner_[nb]];
          switch (d) {
            case kEast: total += ti.right_gap + tj.left_gap; break;
            case kWest: total += tj.right_gap + ti.left_gap; break;
            case kSouth: total += ti.bottom_gap + tj.top_gap; break;
            default: total += tj.bottom_gap + ti.top_gap; break;
          }
        }
      }
    }
    return total;
  }

  // Blocking every tile any remaining candidate could cover is the most any
  // completion can block; if the inside anchor is still reachable by plain
  // movement, no completion is tight.
  bool coverage_can_seal(const Domains& domains, const std::vector<int>& remaining) {
    std::fill(cover_.begin(), cover_.end(), 0);
    for (int r : remaining) {
      for (int k : domains[r]) {
        for (int c : m_.cells[r][k]) ++cover_[c];
      }
    }
    for (std::size_t c = 0; c < cover_.size(); ++c) {
      bound_blocked_[c] = blocked_[c] || cover_[c] > 0;
    }
    reach_dense(m_.index, {bound_blocked_, {}, {}}, ReachMode::literal, m_.index.outside_cell(),
                reached_, work_, m_.index.inside_cell());
    int inside = m_.index.inside_cell();
    return inside < 0 || !reached_[inside];
  }

  // Cheapest plain-movement path from outside to inside around the placed
  // buildings, preferring tiles few candidates cover. Marks it in on_path_.
  bool find_open_path() {
    int from = m_.index.outside_cell();
    int to = m_.index.inside_cell();
    auto open = [&](int c) { return c >= 0 && m_.index.walkable(c) && !blocked_[c]; };
    if (!open(from) || !open(to)) return false;

    // Dial's algorithm: weights are 1 + min(cover, kMaxExtra), so a ring of
    // kMaxExtra + 2 buckets holds every pending distance.
    constexpr int kMaxExtra = 15;
    constexpr int kRing = kMaxExtra + 2;
    dist_.assign(m_.index.size(), INT_MAX);
    prev_.assign(m_.index.size(), -1);
    for (auto& b : buckets_) b.clear();
    buckets_.resize(kRing);
    dist_[from] = 0;
    buckets_[0].push_back(from);
    std::size_t pending = 1;
    for (int d = 0; pending > 0 && dist_[to] > d; ++d) {
      auto& bucket = buckets_[d % kRing];
      while (!bucket.empty()) {
        int c = bucket.back();
        bucket.pop_back();
        --pending;
        if (dist_[c] != d) continue;
        for (int dir = 0; dir < kDirectionCount; ++dir) {
          int nb = m_.index.neighbor(c, dir);
          if (!open(nb)) continue;
          int nd = d + 1 + std::min(cover_[nb], kMaxExtra);
          if (nd < dist_[nb]) {
            dist_[nb] = nd;
            prev_[nb] = c;
            buckets_[nd % kRing].push_back(nb);
            ++pending;
          }
        }
      }
    }
    if (dist_[to] == INT_MAX) return false;
    path_.clear();
    for (int c = to; c != -1; c = prev_[c]) {
      on_path_[c] = 1;
      path_.push_back(c);
    }
    return true;
  }

  void clear_path() {
    for (int c : path_) on_path_[c] = 0;
    path_.clear();
  }

  bool touches_path(int inst, int cand) const {
    const auto& cells = m_.cells[inst][cand];
    return std::any_of(cells.begin(), cells.end(), [&](int c) { return on_path_[c] != 0; });
  }

  void add_child(const Domains& base, const std::vector<int>& remaining, int inst, int cand,
                 std::vector<Child>& out) {
    Domains next = base;
    next[inst].clear();
    if (opts_.overlap_cut) {
      for (int j : remaining) {
        if (j == inst) continue;
        auto& dom = next[j];
        std::erase_if(dom, [&](int k) { return m_.conflict(inst, cand, j, k); });
        if (dom.empty()) return;
      }
    }
    out.push_back({inst, cand, std::move(next)});
  }

  const SearchModel& m_;
  const SearchOptions& opts_;
  LeafCollector& out_;
  int n_;

  std::vector<int> placement_;
  std::vector<int> count_;
  std::vector<int> owner_;
  std::vector<std::uint8_t> blocked_;
  std::vector<std::uint8_t> h_squeeze_;
  std::vector<std::uint8_t> v_squeeze_;
  std::vector<std::uint8_t> bound_blocked_;
  std::vector<std::uint8_t> reached_;
  std::vector<std::uint8_t> on_path_;
  std::vector<int> cover_;
  std::vector<int> work_;
  std::vector<int> dist_;
  std::vector<int> prev_;
  std::vector<int> path_;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace

LeafCollector LeafCollector::empty_like() const { return LeafCollector(order_, capacity_); }

void run_search(const SearchModel& model, const SearchOptions& opts, LeafCollector& out) {
  const int n = static_cast<int>(model.types.size());
  Worker root(model, opts, out);
  if (n == 0) {
    root.leaf();
    return;
  }

  Domains domains(n);
  for (int i = 0; i < n; ++i) {
    domains[i].resize(model.origins[i].size());
    std::iota(domains[i].begin(), domains[i].end(), 0);
  }
  std::vector<Child> children = root.expand(domains);

  unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, children.size()));
  if (workers <= 1) {
    for (const Child& ch : children) {
      root.place(ch.inst, ch.cand);
      root.dfs(ch.domains);
      root.unplace(ch.inst);
    }
    return;
  }

  std::vector<LeafCollector> locals;
  for (unsigned w = 0; w < workers; ++w) locals.push_back(out.empty_like());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        Worker worker(model, opts, locals[w]);
        for (std::size_t i = next++; i < children.size(); i = next++) {
          worker.place(children[i].inst, children[i].cand);
          worker.dfs(children[i].domains);
          worker.unplace(children[i].inst);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  for (auto& local : locals) out.merge(std::move(local));
}

}  // namespace wallin::detail
