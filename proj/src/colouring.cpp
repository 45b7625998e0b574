#include "crx/colouring.hpp"

#include <algorithm>
#include <string>

#include "crx/errors.hpp"

namespace crx {

EdgeColouring::EdgeColouring(Graph g, std::vector<Colour> colours, int r, bool allow_unused)
    : graph_(std::move(g)), colours_(std::move(colours)), r_(r), allow_unused_(allow_unused) {
  if (colours_.size() != static_cast<std::size_t>(graph_.size())) {
    throw InvalidParameter("colouring has " + std::to_string(colours_.size()) + " entries for " +
                           std::to_string(graph_.size()) + " edges");
  }
  if (r_ < 0) throw InvalidParameter("colour count must be nonnegative");
  for (Colour c : colours_) {
    if (c < 0 || c >= r_) throw InvalidParameter("colour " + std::to_string(c) + " outside 0.." + std::to_string(r_ - 1));
  }
  if (!allow_unused_ && used_colour_count() != r_) {
    throw InvalidParameter("colouring declares " + std::to_string(r_) + " colours but uses " +
                           std::to_string(used_colour_count()));
  }
}

EdgeColouring EdgeColouring::compacted(Graph g, std::span<const Colour> labels) {
  std::vector<Colour> map;
  std::vector<Colour> out;
  out.reserve(labels.size());
  int next = 0;
  for (Colour l : labels) {
    if (l < 0) throw InvalidParameter("negative colour label");
    if (static_cast<std::size_t>(l) >= map.size()) map.resize(static_cast<std::size_t>(l) + 1, -1);
    if (map[l] < 0) map[l] = next++;
    out.push_back(map[l]);
  }
  return EdgeColouring(std::move(g), std::move(out), next);
}

EdgeColouring EdgeColouring::rainbow(Graph g) {
  std::vector<Colour> c(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) c[e] = e;
  int r = g.size();
  return EdgeColouring(std::move(g), std::move(c), r);
}

Colour EdgeColouring::colour(Vertex a, Vertex b) const {
  auto e = graph_.edge_between(a, b);
  if (!e) throw InvalidParameter("no edge between " + std::to_string(a) + " and " + std::to_string(b));
  return colour(*e);
}

int EdgeColouring::used_colour_count() const {
  auto sizes = class_sizes();
  return static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](int s) { return s > 0; }));
}

std::vector<int> EdgeColouring::class_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(r_), 0);
  for (Colour c : colours_) ++sizes[c];
  return sizes;
}

EdgeColouring EdgeColouring::permuted(std::span<const Colour> perm) const {
  if (perm.size() != static_cast<std::size_t>(r_)) throw InvalidParameter("permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (Colour c : perm) {
    if (c < 0 || c >= r_ || seen[c]) throw InvalidParameter("not a permutation of the colours");
    seen[c] = 1;
  }
  std::vector<Colour> out(colours_.size());
  for (std::size_t e = 0; e < colours_.size(); ++e) out[e] = perm[colours_[e]];
  return EdgeColouring(graph_, std::move(out), r_, allow_unused_);
}

void ColouringBuilder::set(Vertex a, Vertex b, Colour c) {
  auto e = g_.edge_between(a, b);
  if (!e) throw InvalidParameter("no edge between " + std::to_string(a) + " and " + std::to_string(b));
  colours_[*e] = c;
}

bool ColouringBuilder::is_set(Vertex a, Vertex b) const {
  auto e = g_.edge_between(a, b);
  return e && colours_[*e] >= 0;
}

void ColouringBuilder::fill_unset(Colour c) {
  for (Colour& x : colours_) {
    if (x < 0) x = c;
  }
}

EdgeColouring ColouringBuilder::finish(int r) const {
  for (EdgeId e = 0; e < g_.size(); ++e) {
    if (colours_[e] < 0) {
      throw InvalidParameter("edge " + std::to_string(g_.edge(e).u) + "-" + std::to_string(g_.edge(e).v) +
                             " left uncoloured");
    }
  }
  return EdgeColouring(g_, colours_, r);
}

}  // namespace crx
