#include "ultra/space.hpp"

#include <algorithm>
#include <unordered_set>

#include "space_access.hpp"

namespace ultra {

std::optional<std::size_t> UltrametricSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::optional<ValidationIssue> find_ultrametric_violation(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<Rational>>& distances) {
  const std::size_t n = labels.size();
  if (n == 0)
    return ValidationIssue{errc::parse_error, {}, "a space needs at least one point"};

  {
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i].empty())
        return ValidationIssue{errc::parse_error, {i}, "labels must be nonempty"};
      if (!seen.insert(labels[i]).second)
        return ValidationIssue{errc::duplicate_label, {i}, "duplicate label '" + labels[i] + "'"};
    }
  }

  if (distances.size() != n)
    return ValidationIssue{errc::parse_error, {}, "distance table is not n x n"};
  for (std::size_t i = 0; i < n; ++i)
    if (distances[i].size() != n)
      return ValidationIssue{errc::parse_error, {i}, "distance table row has wrong length"};

  for (std::size_t i = 0; i < n; ++i)
    if (!distances[i][i].is_zero())
      return ValidationIssue{errc::non_zero_diagonal,
                             {i},
                             "d(" + labels[i] + "," + labels[i] + ") = " +
                                 distances[i][i].str() + ", expected 0"};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (distances[i][j] != distances[j][i])
        return ValidationIssue{errc::non_symmetric,
                               {i, j},
                               "d(" + labels[i] + "," + labels[j] + ") = " +
                                   distances[i][j].str() + " but d(" + labels[j] + "," +
                                   labels[i] + ") = " + distances[j][i].str()};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (distances[i][j].is_zero())
        return ValidationIssue{errc::zero_off_diagonal,
                               {i, j},
                               "d(" + labels[i] + "," + labels[j] + ") = 0 between distinct points"};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Rational& ik = distances[i][k];
        const Rational& ij = distances[i][j];
        const Rational& jk = distances[j][k];
        if (ik > max(ij, jk))
          return ValidationIssue{errc::strong_triangle_violation,
                                 {i, j, k},
                                 "strong triangle violation (" + labels[i] + "," + labels[j] +
                                     "," + labels[k] + "): d(" + labels[i] + "," + labels[k] +
                                     ") = " + ik.str() + " > max(" + ij.str() + ", " + jk.str() +
                                     ")"};
      }
    }

  return std::nullopt;
}

UltrametricSpace UltrametricSpace::create(std::vector<std::string> labels,
                                          std::vector<std::vector<Rational>> distances) {
  if (auto issue = find_ultrametric_violation(labels, distances))
    throw Error(issue->code, issue->message, issue->where);
  const std::size_t n = labels.size();
  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (const auto& row : distances)
    for (const auto& d : row) flat.push_back(d);
  return UltrametricSpace(std::move(labels), std::move(flat));
}

UltrametricSpace validate_ultrametric(std::vector<std::string> labels,
                                      std::vector<std::vector<Rational>> distances) {
  return UltrametricSpace::create(std::move(labels), std::move(distances));
}

bool Spectrum::contains(const Rational& r) const {
  return std::binary_search(values.begin(), values.end(), r);
}

Spectrum spectrum(const UltrametricSpace& space) {
  std::vector<Rational> vals;
  vals.push_back(Rational(0));
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) vals.push_back(space.dist(i, j));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return Spectrum{std::move(vals)};
}

std::vector<Rational> spectrum_above(const UltrametricSpace& space, const Rational& eps) {
  auto spec = spectrum(space).values;
  std::erase_if(spec, [&](const Rational& v) { return v < eps; });
  return spec;
}

Rational diameter(const UltrametricSpace& space) {
  Rational d(0);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) d = max(d, space.dist(i, j));
  return d;
}

std::vector<Block> blocks_at(const UltrametricSpace& space, const Rational& level) {
  const std::size_t n = space.size();
  std::vector<Block> blocks;
  std::vector<bool> assigned(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    // In an ultrametric, {j : d(i,j) <= t} is a full equivalence class.
    Block b{{}, level};
    for (std::size_t j = i; j < n; ++j) {
      if (!assigned[j] && space.dist(i, j) <= level) {
        b.members.push_back(j);
        assigned[j] = true;
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

UltrametricSpace quotient(const UltrametricSpace& space, const Rational& level) {
  auto blocks = blocks_at(space, level);
  const std::size_t m = blocks.size();

  std::vector<std::string> labels;
  std::vector<std::size_t> reps;
  labels.reserve(m);
  reps.reserve(m);
  for (const auto& b : blocks) {
    std::size_t best = b.members.front();
    for (std::size_t p : b.members)
      if (space.label(p) < space.label(best)) best = p;
    labels.push_back(space.label(best));
    reps.push_back(b.members.front());
  }

  std::vector<Rational> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      // Any representatives give the same inter-block value.
      const Rational& d = space.dist(reps[a], reps[b]);
      flat[a * m + b] = d;
      flat[b * m + a] = d;
    }
  return SpaceAccess::make(std::move(labels), std::move(flat));
}

UltrametricSpace subspace(const UltrametricSpace& space, std::span<const std::size_t> points) {
  if (points.empty()) throw Error(errc::empty_subset, "subspace needs at least one point");
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (std::size_t p : points) {
    if (p >= space.size())
      throw Error(errc::bad_ids, "point index out of range", {p});
    labels.push_back(space.label(p));
  }
  const std::size_t m = points.size();
  std::vector<Rational> flat(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = space.dist(points[a], points[b]);
  return SpaceAccess::make(std::move(labels), std::move(flat));
}

}  // namespace ultra
