#include "ultra/embed.hpp"

#include <algorithm>
#include <numeric>

#include "ultra/canon.hpp"
#include "ultra/error.hpp"
#include "ultra/ghdist.hpp"

namespace ultra {

namespace {

std::string witness_text(const UltrametricSpace& source, const EmbeddingReport& report) {
  const auto& d = report.deviations.front();
  return "(" + source.label(d.i) + "," + source.label(d.j) + ") expected " +
         d.expected.str() + ", got " + d.actual.str();
}

EmbeddingReport verify_against(const UltrametricSpace& base,
                               const std::vector<UltrametricSpace>& images) {
  EmbeddingReport report;
  const std::size_t n = images.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.pairs;
      Rational actual = ugh(images[i], images[j]).value;
      if (actual != base.dist(i, j))
        report.deviations.push_back(
            EmbeddingReport::Deviation{i, j, base.dist(i, j), std::move(actual)});
    }
  return report;
}

}  // namespace

SpaceFamily embed_finite(const UltrametricSpace& space, const Ordering& ord) {
  if (auto violation = admissibility_violation(space, ord))
    throw Error(errc::not_admissible,
                "order is not admissible at rank triple (" + std::to_string((*violation)[0]) +
                    "," + std::to_string((*violation)[1]) + "," +
                    std::to_string((*violation)[2]) + ")",
                {(*violation)[0], (*violation)[1], (*violation)[2]});

  SpaceFamily family;
  for (std::size_t i = 0; i < ord.size(); ++i) {
    family.source_labels.push_back(space.label(ord.points[i]));
    family.images.push_back(
        subspace(space, std::span(ord.points.data(), i + 1)));
  }
  return family;
}

UltrametricSpace one_point_extension(const ExtensionInput& input) {
  const std::size_t n = input.base.size();
  if (input.images.size() != n || input.distances.size() != n)
    throw Error(errc::mismatched_input,
                "base space, images and distances must have equal length");
  for (std::size_t i = 0; i < n; ++i)
    if (input.distances[i].is_zero())
      throw Error(errc::inconsistent_distances,
                  "distance to '" + input.base.label(i) + "' must be positive", {i});

  // The declared distances must extend the base to a valid ultrametric.
  {
    std::vector<std::string> labels = input.base.labels();
    if (std::find(labels.begin(), labels.end(), input.new_label) != labels.end())
      throw Error(errc::duplicate_label,
                  "new point label '" + input.new_label + "' already names a base point");
    labels.push_back(input.new_label);
    std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i][j] = input.base.dist(i, j);
    for (std::size_t i = 0; i < n; ++i) {
      table[i][n] = input.distances[i];
      table[n][i] = input.distances[i];
    }
    if (auto issue = find_ultrametric_violation(labels, table))
      throw Error(errc::inconsistent_distances,
                  "declared distances are not ultrametrically consistent: " + issue->message,
                  issue->where);
  }

  if (auto report = verify_against(input.base, input.images); !report.passed())
    throw Error(errc::base_not_isometric,
                "base family is not an isometric embedding: " +
                    witness_text(input.base, report));

  Rational delta = input.distances[0];
  for (const auto& d : input.distances) delta = min(delta, d);
  std::vector<std::size_t> argmin;
  for (std::size_t i = 0; i < n; ++i)
    if (input.distances[i] == delta) argmin.push_back(i);

  const UltrametricSpace z = quotient(input.images[argmin.front()], delta);
  for (std::size_t k : argmin)
    if (canonical_signature(quotient(input.images[k], delta)) != canonical_signature(z))
      throw Error(errc::base_not_isometric,
                  "argmin images disagree at the minimum distance level", {k});

  const Rational half_delta = delta.half();
  std::size_t fresh_count = 0;
  for (std::size_t k : argmin)
    fresh_count = std::max(fresh_count, quotient(input.images[k], half_delta).size());
  ++fresh_count;  // N + 1

  std::size_t basepoint = 0;
  for (std::size_t i = 1; i < z.size(); ++i)
    if (z.label(i) < z.label(basepoint)) basepoint = i;

  std::vector<std::string> labels = z.labels();
  for (std::size_t s = 1; s <= fresh_count; ++s) {
    std::string fresh = "*" + std::to_string(s);
    while (std::find(labels.begin(), labels.end(), fresh) != labels.end()) fresh += "*";
    labels.push_back(fresh);
  }

  const std::size_t m = z.size() + fresh_count;
  std::vector<std::vector<Rational>> table(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) table[i][j] = z.dist(i, j);
  for (std::size_t s = z.size(); s < m; ++s) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      // Fresh points sit at delta from the basepoint and inherit the
      // basepoint's distance to every other point of Z.
      const Rational d = (i == basepoint) ? delta : z.dist(basepoint, i);
      table[i][s] = d;
      table[s][i] = d;
    }
    for (std::size_t s2 = z.size(); s2 < s; ++s2) {
      table[s][s2] = delta;  // fresh points are pairwise delta apart
      table[s2][s] = delta;
    }
  }
  return UltrametricSpace::create(std::move(labels), std::move(table));
}

SpaceFamily extend_embedding(const UltrametricSpace& whole,
                             std::span<const std::size_t> embedded,
                             const SpaceFamily& partial) {
  if (embedded.empty())
    throw Error(errc::empty_subset, "the embedded subset must be nonempty");
  if (partial.images.size() != embedded.size() ||
      partial.source_labels.size() != embedded.size())
    throw Error(errc::mismatched_input, "family size does not match the embedded subset");

  std::vector<bool> used(whole.size(), false);
  for (std::size_t i = 0; i < embedded.size(); ++i) {
    const std::size_t p = embedded[i];
    if (p >= whole.size() || used[p])
      throw Error(errc::bad_ids, "embedded subset is not a set of valid indices", {p});
    used[p] = true;
    if (partial.source_labels[i] != whole.label(p))
      throw Error(errc::mismatched_input,
                  "family label '" + partial.source_labels[i] +
                      "' does not match point '" + whole.label(p) + "'",
                  {i});
  }

  std::vector<std::size_t> current(embedded.begin(), embedded.end());
  if (auto report = verify_against(subspace(whole, current), partial.images);
      !report.passed())
    throw Error(errc::base_not_isometric,
                "partial family is not an isometric embedding: " +
                    witness_text(subspace(whole, current), report));

  std::vector<std::size_t> missing;
  for (std::size_t p = 0; p < whole.size(); ++p)
    if (!used[p]) missing.push_back(p);
  std::sort(missing.begin(), missing.end(), [&](std::size_t a, std::size_t b) {
    return whole.label(a) < whole.label(b);
  });

  SpaceFamily family = partial;
  for (std::size_t p : missing) {
    ExtensionInput input{subspace(whole, current), family.images, whole.label(p), {}};
    input.distances.reserve(current.size());
    for (std::size_t q : current) input.distances.push_back(whole.dist(p, q));
    family.images.push_back(one_point_extension(input));
    family.source_labels.push_back(whole.label(p));
    current.push_back(p);
  }
  return family;
}

EmbeddingReport verify_embedding(const UltrametricSpace& source, const SpaceFamily& family) {
  if (family.images.size() != source.size() ||
      family.source_labels.size() != source.size())
    throw Error(errc::mismatched_input, "family size does not match the source space");

  std::vector<std::size_t> points;
  points.reserve(source.size());
  for (const auto& label : family.source_labels) {
    auto idx = source.index_of(label);
    if (!idx) throw Error(errc::unknown_leaf, "family label '" + label + "' not in source");
    points.push_back(*idx);
  }
  std::vector<bool> seen(source.size(), false);
  for (std::size_t p : points) {
    if (seen[p])
      throw Error(errc::mismatched_input, "family repeats source label '" + source.label(p) + "'");
    seen[p] = true;
  }
  return verify_against(subspace(source, points), family.images);
}

}  // namespace ultra
