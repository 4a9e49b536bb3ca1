#include "ultra/io.hpp"

#include <algorithm>
#include <json.hpp>

#include "ultra/error.hpp"

namespace ultra {

namespace {

using nlohmann::json;

[[noreturn]] void bad_doc(const std::string& path, const std::string& reason) {
  throw Error(errc::parse_error, path + ": " + reason);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_entry(const json& value, const std::string& path) {
  if (value.is_string()) {
    auto parsed = Rational::try_parse(value.get<std::string>());
    if (!parsed) bad_doc(path, "invalid rational '" + value.get<std::string>() + "'");
    return *parsed;
  }
  if (value.is_number_unsigned()) return Rational(BigInt(value.get<std::uint64_t>()), BigInt(1));
  if (value.is_number_integer()) bad_doc(path, "negative values are not allowed");
  if (value.is_number_float())
    bad_doc(path, "write non-integer values as quoted strings (\"1/2\" or \"0.5\") to keep them exact");
  bad_doc(path, "expected a string or integer");
}

UltrametricSpace space_from_json(const json& doc, const std::string& path) {
  if (!doc.is_object()) bad_doc(path, "expected an object with 'points' and 'distances'");
  if (!doc.contains("points") || !doc["points"].is_array())
    bad_doc(path + ".points", "expected an array of label strings");
  if (!doc.contains("distances") || !doc["distances"].is_array())
    bad_doc(path + ".distances", "expected an n x n array");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const auto& p = doc["points"][i];
    if (!p.is_string()) bad_doc(path + ".points[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(p.get<std::string>());
  }
  const std::size_t n = labels.size();
  if (n == 0) bad_doc(path + ".points", "a space needs at least one point");

  const auto& rows = doc["distances"];
  if (rows.size() != n)
    bad_doc(path + ".distances", "expected " + std::to_string(n) + " rows, got " +
                                     std::to_string(rows.size()));
  std::vector<std::vector<Rational>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    const std::string row_path = path + ".distances[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n)
      bad_doc(row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j)
      table[i].push_back(rational_entry(row[j], row_path + "[" + std::to_string(j) + "]"));
  }
  return validate_ultrametric(std::move(labels), std::move(table));
}

json space_to_json(const UltrametricSpace& space) {
  json doc;
  doc["points"] = space.labels();
  json rows = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.dist(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  return doc;
}

std::size_t size_entry(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    if (value.is_string()) {
      const std::string s = value.get<std::string>();
      if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
        return std::stoull(s);
    }
    bad_doc(path, "expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t id_field(std::string_view field, const std::string& path) {
  field = trim(field);
  if (field.empty() || field.find_first_not_of("0123456789") != std::string_view::npos)
    throw Error(errc::bad_ids, path + ": expected a non-negative integer id, got '" +
                                   std::string(field) + "'");
  return std::stoull(std::string(field));
}

}  // namespace

UltrametricSpace parse_space(std::string_view json_text) {
  return space_from_json(parse_json(json_text), "$");
}

std::string write_space(const UltrametricSpace& space) {
  return space_to_json(space).dump(2) + "\n";
}

ParsedFamily parse_family(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("source") || !doc.contains("images") ||
      !doc["images"].is_array())
    throw Error(errc::parse_error, "$: expected an object with 'source' and 'images'");

  ParsedFamily parsed{space_from_json(doc["source"], "$.source"), {}};
  parsed.family.source_labels = parsed.source.labels();
  for (std::size_t i = 0; i < doc["images"].size(); ++i)
    parsed.family.images.push_back(
        space_from_json(doc["images"][i], "$.images[" + std::to_string(i) + "]"));
  if (parsed.family.images.size() != parsed.source.size())
    throw Error(errc::mismatched_input,
                "family has " + std::to_string(parsed.family.images.size()) +
                    " images for " + std::to_string(parsed.source.size()) + " source points");
  return parsed;
}

std::string write_family(const UltrametricSpace& source, const SpaceFamily& family) {
  if (family.source_labels != source.labels() || family.images.size() != source.size())
    throw Error(errc::mismatched_input, "family is not aligned with the source space");
  json doc;
  doc["source"] = space_to_json(source);
  json images = json::array();
  for (const auto& image : family.images) images.push_back(space_to_json(image));
  doc["images"] = std::move(images);
  return doc.dump(2) + "\n";
}

std::vector<LinkageRow> parse_linkage_csv(std::string_view text) {
  std::vector<LinkageRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::string path = "line " + std::to_string(line_no);
    std::vector<std::string_view> fields;
    std::size_t field_start = 0;
    while (true) {
      const std::size_t comma = line.find(',', field_start);
      fields.push_back(line.substr(field_start, comma - field_start));
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    if (fields.size() != 4)
      throw Error(errc::parse_error, path + ": expected 'left,right,height,size'");

    LinkageRow row;
    row.left = id_field(fields[0], path);
    row.right = id_field(fields[1], path);
    try {
      row.height = Rational::parse(trim(fields[2]));
    } catch (const Error& e) {
      throw Error(errc::parse_error, path + ": " + e.what());
    }
    row.size = id_field(fields[3], path);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<LinkageRow> parse_linkage_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw Error(errc::parse_error, "$: expected an array of rows");
  std::vector<LinkageRow> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "$[" + std::to_string(i) + "]";
    const auto& entry = doc[i];
    if (!entry.is_array() || entry.size() != 4)
      throw Error(errc::parse_error, path + ": expected [left, right, height, size]");
    LinkageRow row;
    row.left = size_entry(entry[0], path + "[0]");
    row.right = size_entry(entry[1], path + "[1]");
    row.height = rational_entry(entry[2], path + "[2]");
    row.size = size_entry(entry[3], path + "[3]");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<LinkageRow> parse_linkage_text(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return parse_linkage_json(text);
  return parse_linkage_csv(text);
}

Dendrogram parse_linkage(std::span<const LinkageRow> rows, std::vector<std::string> labels) {
  const std::size_t n = rows.size() + 1;
  if (labels.size() != n)
    throw Error(errc::mismatched_input, "need " + std::to_string(n) + " labels for " +
                                            std::to_string(rows.size()) + " rows");

  struct TempNode {
    Rational height;
    std::string label;
    std::vector<std::size_t> children;  // temp ids
  };
  std::vector<TempNode> temp;
  temp.reserve(2 * n);
  for (auto& label : labels) temp.push_back(TempNode{Rational(0), std::move(label), {}});

  std::vector<bool> used(2 * n - 1, false);
  Rational prev_height(0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const LinkageRow& row = rows[r];
    const std::string path = "row " + std::to_string(r);
    if (row.height <= Rational(0))
      throw Error(errc::non_monotone_heights, path + ": height must be positive");
    if (r > 0 && row.height < prev_height)
      throw Error(errc::non_monotone_heights,
                  path + ": height " + row.height.str() + " decreases below " +
                      prev_height.str());
    prev_height = row.height;

    const std::size_t created = n + r;
    std::vector<std::size_t> children;
    for (std::size_t child : {row.left, row.right}) {
      if (child >= created)
        throw Error(errc::bad_ids, path + ": cluster id " + std::to_string(child) +
                                       " does not exist yet");
      if (used[child])
        throw Error(errc::bad_ids,
                    path + ": cluster id " + std::to_string(child) + " already merged");
      used[child] = true;
      // Equal-height chained merges collapse into one k-ary node.
      if (!temp[child].children.empty() && temp[child].height == row.height)
        for (std::size_t grandchild : temp[child].children) children.push_back(grandchild);
      else
        children.push_back(child);
    }
    temp.push_back(TempNode{row.height, "", std::move(children)});
  }

  // Compact reachable nodes into a Dendrogram node list.
  const std::size_t root_temp = temp.size() - 1;
  std::vector<Dendrogram::Node> nodes;
  std::vector<std::size_t> new_id(temp.size(), SIZE_MAX);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root_temp, 0}};
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (slot < temp[v].children.size()) {
      stack.emplace_back(temp[v].children[slot++], 0);
      continue;
    }
    std::vector<std::size_t> children;
    for (std::size_t c : temp[v].children) children.push_back(new_id[c]);
    nodes.push_back(Dendrogram::Node{temp[v].height, temp[v].label, std::move(children)});
    new_id[v] = nodes.size() - 1;
    stack.pop_back();
  }
  for (std::size_t leaf = 0; leaf < n; ++leaf)
    if (n > 1 && new_id[leaf] == SIZE_MAX)
      throw Error(errc::bad_ids, "leaf " + std::to_string(leaf) + " never merged");
  return Dendrogram::from_nodes(std::move(nodes), new_id[root_temp]);
}

}  // namespace ultra
