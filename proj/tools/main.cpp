#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "ultra/canon.hpp"
#include "ultra/dendrogram.hpp"
#include "ultra/embed.hpp"
#include "ultra/error.hpp"
#include "ultra/gen.hpp"
#include "ultra/ghdist.hpp"
#include "ultra/io.hpp"
#include "ultra/order.hpp"
#include "ultra/render.hpp"
#include "ultra/space.hpp"

namespace {

using nlohmann::json;
using namespace ultra;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(errc::parse_error, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(errc::parse_error, "cannot write '" + out_path + "'");
  file << text;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

Rational parse_level_arg(const std::string& text) {
  if (auto parsed = Rational::try_parse(text)) return *parsed;
  std::string_view sv = text;
  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
  if (!sv.empty() && sv.front() == '-')
    throw Error(errc::negative_level, "level must be non-negative, got '" + text + "'");
  throw Error(errc::parse_error, "invalid level '" + text + "'");
}

Ordering resolve_order(const UltrametricSpace& space, const std::string& order_arg) {
  if (order_arg.empty() || order_arg == "auto") return admissible_order(space);
  return ordering_from_labels(space, split_csv(order_arg));
}

bool is_table_axiom(errc code) {
  switch (code) {
    case errc::duplicate_label:
    case errc::non_zero_diagonal:
    case errc::non_symmetric:
    case errc::zero_off_diagonal:
    case errc::strong_triangle_violation:
      return true;
    default:
      return false;
  }
}

struct CommonOpts {
  bool json = false;
  std::string out;
};

json witness_json(const Error& e) {
  json w = json::array();
  for (std::size_t i : e.witness()) w.push_back(i);
  return w;
}

int cmd_validate(const std::string& path, const CommonOpts& opts) {
  const std::string text = read_input(path);
  try {
    parse_space(text);
  } catch (const Error& e) {
    if (!is_table_axiom(e.code())) throw;
    if (opts.json) {
      json doc{{"valid", false},
               {"error",
                {{"kind", std::string(errc_name(e.code()))},
                 {"message", e.what()},
                 {"witness", witness_json(e)}}}};
      emit(doc.dump(2) + "\n", opts.out);
    } else {
      emit(std::string(e.what()) + "\n", opts.out);
    }
    return kExitDomain;
  }
  emit(opts.json ? json{{"valid", true}}.dump(2) + "\n" : std::string("ok\n"), opts.out);
  return kExitOk;
}

int cmd_spectrum(const std::string& path, const std::string& above, const CommonOpts& opts) {
  const auto space = parse_space(read_input(path));
  const std::vector<Rational> values =
      above.empty() ? spectrum(space).values : spectrum_above(space, parse_level_arg(above));
  if (opts.json) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    emit(json{{"spectrum", arr}}.dump(2) + "\n", opts.out);
  } else {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += " ";
      line += values[i].str();
    }
    emit(line + "\n", opts.out);
  }
  return kExitOk;
}

int cmd_quotient(const std::string& path, const std::string& level, const CommonOpts& opts) {
  const auto space = parse_space(read_input(path));
  emit(write_space(quotient(space, parse_level_arg(level))), opts.out);
  return kExitOk;
}

int cmd_canon(const std::vector<std::string>& paths, const CommonOpts& opts) {
  std::vector<std::string> sigs;
  for (const auto& path : paths) sigs.push_back(canonical_signature(parse_space(read_input(path))));
  if (opts.json) {
    emit(json{{"signatures", sigs}}.dump(2) + "\n", opts.out);
  } else {
    std::string lines;
    for (const auto& sig : sigs) lines += sig + "\n";
    emit(lines, opts.out);
  }
  return kExitOk;
}

int cmd_ugh(const std::string& path_a, const std::string& path_b, bool scan, bool lower_bound_only,
            const CommonOpts& opts) {
  const auto a = parse_space(read_input(path_a));
  const auto b = parse_space(read_input(path_b));
  if (lower_bound_only) {
    const Rational bound = spec_lower_bound(a, b);
    emit(opts.json ? json{{"lower_bound", bound.str()}}.dump(2) + "\n"
                   : "lower_bound=" + bound.str() + "\n",
         opts.out);
    return kExitOk;
  }
  const GHResult result = ugh(a, b, scan ? UghMode::linear_scan : UghMode::binary_search);
  if (opts.json) {
    emit(json{{"value", result.value.str()},
              {"level", result.witness_level.str()},
              {"signature", result.witness_signature}}
                 .dump(2) +
             "\n",
         opts.out);
  } else {
    emit("value=" + result.value.str() + " level=" + result.witness_level.str() +
             " signature=" + result.witness_signature + "\n",
         opts.out);
  }
  return kExitOk;
}

int cmd_order(const std::string& path, const std::string& sequence, bool check,
              const std::string& order_arg, const CommonOpts& opts) {
  if (check && order_arg.empty())
    throw CLI::ValidationError("order", "--check needs --order");
  const auto space = parse_space(read_input(path));
  if (check) {
    const Ordering ord = ordering_from_labels(space, split_csv(order_arg));
    const auto violation = admissibility_violation(space, ord);
    if (opts.json) {
      json doc{{"admissible", !violation.has_value()}};
      if (violation) {
        json w = json::array();
        for (std::size_t rank : *violation) w.push_back(space.label(ord.points[rank]));
        doc["witness"] = w;
      }
      emit(doc.dump(2) + "\n", opts.out);
    } else if (violation) {
      emit("violation: (" + space.label(ord.points[(*violation)[0]]) + "," +
               space.label(ord.points[(*violation)[1]]) + "," +
               space.label(ord.points[(*violation)[2]]) + ")\n",
           opts.out);
    } else {
      emit("OK\n", opts.out);
    }
    return violation ? kExitDomain : kExitOk;
  }

  Ordering ord;
  if (sequence.empty()) {
    ord = admissible_order(space);
  } else {
    std::vector<std::size_t> seq;
    for (const auto& field : split_csv(sequence)) {
      if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
        throw Error(errc::invalid_sequence, "invalid index '" + field + "' in sequence");
      seq.push_back(std::stoull(field));
    }
    ord = admissible_order(space, seq);
  }
  if (opts.json) {
    json arr = json::array();
    for (std::size_t p : ord.points) arr.push_back(space.label(p));
    emit(json{{"order", arr}}.dump(2) + "\n", opts.out);
  } else {
    std::string line;
    for (std::size_t i = 0; i < ord.points.size(); ++i) {
      if (i) line += " ";
      line += space.label(ord.points[i]);
    }
    emit(line + "\n", opts.out);
  }
  return kExitOk;
}

int cmd_embed(const std::string& path, const std::string& order_arg, const CommonOpts& opts) {
  const auto space = parse_space(read_input(path));
  const Ordering ord = resolve_order(space, order_arg);
  const SpaceFamily family = embed_finite(space, ord);
  emit(write_family(subspace(space, ord.points), family), opts.out);
  return kExitOk;
}

UltrametricSpace extended_source(const UltrametricSpace& base, const std::string& new_label,
                                 const std::vector<Rational>& distances) {
  std::vector<std::string> labels = base.labels();
  labels.push_back(new_label);
  const std::size_t n = base.size();
  std::vector<std::vector<Rational>> table(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = base.dist(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    table[i][n] = distances[i];
    table[n][i] = distances[i];
  }
  return validate_ultrametric(std::move(labels), std::move(table));
}

int cmd_extend(const std::string& family_path, const std::string& source_path,
               const std::string& new_point, const CommonOpts& opts) {
  ParsedFamily parsed = parse_family(read_input(family_path));

  if (!new_point.empty()) {
    const std::size_t colon = new_point.find(':');
    if (colon == std::string::npos || colon == 0)
      throw Error(errc::parse_error, "--new-point expects 'label:d1,d2,...'");
    const std::string label = new_point.substr(0, colon);
    std::vector<Rational> distances;
    for (const auto& field : split_csv(new_point.substr(colon + 1)))
      distances.push_back(Rational::parse(field));
    if (!source_path.empty()) {
      const auto source = parse_space(read_input(source_path));
      if (!(source == parsed.source))
        throw Error(errc::mismatched_input,
                    "--source does not match the family's source document");
    }
    const UltrametricSpace image = one_point_extension(
        ExtensionInput{parsed.source, parsed.family.images, label, distances});
    SpaceFamily family = parsed.family;
    family.source_labels.push_back(label);
    family.images.push_back(image);
    emit(write_family(extended_source(parsed.source, label, distances), family), opts.out);
    return kExitOk;
  }

  if (source_path.empty())
    throw CLI::ValidationError("extend", "need --new-point or --source");
  const auto whole = parse_space(read_input(source_path));
  std::vector<std::size_t> embedded;
  for (const auto& label : parsed.family.source_labels) {
    auto idx = whole.index_of(label);
    if (!idx)
      throw Error(errc::unknown_leaf, "family label '" + label + "' not in --source space");
    embedded.push_back(*idx);
  }
  for (std::size_t i = 0; i < embedded.size(); ++i)
    for (std::size_t j = 0; j < embedded.size(); ++j)
      if (parsed.source.dist(i, j) != whole.dist(embedded[i], embedded[j]))
        throw Error(errc::mismatched_input,
                    "family source distances disagree with --source space");

  const SpaceFamily family = extend_embedding(whole, embedded, parsed.family);
  // Same point order the extension used: embedded points, then the rest by label.
  std::vector<std::size_t> order = embedded;
  for (const auto& label : family.source_labels)
    if (std::find(parsed.family.source_labels.begin(), parsed.family.source_labels.end(),
                  label) == parsed.family.source_labels.end())
      order.push_back(*whole.index_of(label));
  emit(write_family(subspace(whole, order), family), opts.out);
  return kExitOk;
}

int cmd_verify(const std::string& family_path, const std::string& source_path,
               const CommonOpts& opts) {
  const ParsedFamily parsed = parse_family(read_input(family_path));
  const UltrametricSpace source =
      source_path.empty() ? parsed.source : parse_space(read_input(source_path));
  const EmbeddingReport report = verify_embedding(source, parsed.family);
  if (opts.json) {
    json mismatches = json::array();
    for (const auto& d : report.deviations)
      mismatches.push_back(json{{"a", parsed.family.source_labels[d.i]},
                                {"b", parsed.family.source_labels[d.j]},
                                {"expected", d.expected.str()},
                                {"actual", d.actual.str()}});
    emit(json{{"pairs", report.pairs}, {"mismatches", mismatches}}.dump(2) + "\n", opts.out);
  } else {
    std::string text = "pairs=" + std::to_string(report.pairs) +
                       " mismatches=" + std::to_string(report.deviations.size()) + "\n";
    for (const auto& d : report.deviations)
      text += "  (" + parsed.family.source_labels[d.i] + "," + parsed.family.source_labels[d.j] +
              ") expected=" + d.expected.str() + " actual=" + d.actual.str() + "\n";
    emit(text, opts.out);
  }
  return report.passed() ? kExitOk : kExitDomain;
}

int cmd_gen(std::size_t n, const std::string& heights, std::uint64_t seed, std::size_t max_arity,
            const CommonOpts& opts) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.max_arity = max_arity;
  for (const auto& field : split_csv(heights)) cfg.height_set.push_back(Rational::parse(field));
  emit(write_space(random_space(cfg)), opts.out);
  return kExitOk;
}

int cmd_linkage(const std::string& path, const std::string& labels_arg, const CommonOpts& opts) {
  const auto rows = parse_linkage_text(read_input(path));
  std::vector<std::string> labels;
  if (labels_arg.empty()) {
    for (std::size_t i = 0; i <= rows.size(); ++i) labels.push_back(std::to_string(i));
  } else {
    labels = split_csv(labels_arg);
  }
  emit(write_space(ultrametric_of(parse_linkage(rows, std::move(labels)))), opts.out);
  return kExitOk;
}

int cmd_render(const std::string& path, const std::string& order_arg, const std::string& format,
               const CommonOpts& opts) {
  if (format != "svg" && format != "ascii")
    throw CLI::ValidationError("render", "--format must be svg or ascii");
  const auto space = parse_space(read_input(path));
  const Ordering ord = resolve_order(space, order_arg);
  const RenderFormat fmt = format == "svg" ? RenderFormat::svg : RenderFormat::ascii;
  const std::string text = render(space, ord, fmt);
  if (opts.json) {
    std::vector<std::string> leaf_order;
    for (std::size_t p : ord.points) leaf_order.push_back(space.label(p));
    const Layout layout = compute_layout(dendrogram_of(space), leaf_order);
    emit(json{{"format", format}, {"crossings", layout.crossings}, {"content", text}}.dump(2) +
             "\n",
         opts.out);
  } else {
    emit(text, opts.out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for finite ultrametric spaces: Gromov-Hausdorff "
               "ultrametric, dendrograms, canonical forms, admissible orders and "
               "embeddings"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, CommonOpts& opts) {
    sub->add_flag("--json", opts.json, "machine-readable JSON output");
    sub->add_option("--out", opts.out, "write output to a file instead of stdout");
  };

  // validate
  std::string v_path;
  CommonOpts v_opts;
  auto* validate_cmd = app.add_subcommand("validate", "check the ultrametric axioms");
  validate_cmd->add_option("space", v_path, "space JSON ('-' for stdin)")->required();
  add_common(validate_cmd, v_opts);

  // spectrum
  std::string sp_path, sp_above;
  CommonOpts sp_opts;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "distinct distance values");
  spectrum_cmd->add_option("space", sp_path)->required();
  spectrum_cmd->add_option("--above", sp_above, "only values >= this cutoff");
  add_common(spectrum_cmd, sp_opts);

  // quotient
  std::string q_path, q_level;
  CommonOpts q_opts;
  auto* quotient_cmd = app.add_subcommand("quotient", "collapse blocks at a level");
  quotient_cmd->add_option("space", q_path)->required();
  quotient_cmd->add_option("--level", q_level)->required();
  add_common(quotient_cmd, q_opts);

  // canon
  std::vector<std::string> c_paths;
  CommonOpts c_opts;
  auto* canon_cmd = app.add_subcommand("canon", "canonical signature, one per line");
  canon_cmd->add_option("spaces", c_paths)->required()->expected(-1);
  add_common(canon_cmd, c_opts);

  // ugh
  std::string u_a, u_b;
  bool u_scan = false, u_lb = false;
  CommonOpts u_opts;
  auto* ugh_cmd = app.add_subcommand("ugh", "Gromov-Hausdorff ultrametric between two spaces");
  ugh_cmd->add_option("a", u_a)->required();
  ugh_cmd->add_option("b", u_b)->required();
  ugh_cmd->add_flag("--scan", u_scan, "exhaustive linear scan instead of binary search");
  ugh_cmd->add_flag("--lower-bound-only", u_lb, "print only the spectral lower bound");
  add_common(ugh_cmd, u_opts);

  // order
  std::string o_path, o_sequence, o_order;
  bool o_check = false;
  CommonOpts o_opts;
  auto* order_cmd = app.add_subcommand("order", "construct or check an admissible order");
  order_cmd->add_option("space", o_path)->required();
  order_cmd->add_option("--sequence", o_sequence, "insertion sequence of point indices");
  order_cmd->add_flag("--check", o_check, "check --order instead of constructing");
  order_cmd->add_option("--order", o_order, "comma-separated labels to check");
  add_common(order_cmd, o_opts);

  // embed
  std::string e_path, e_order = "auto";
  CommonOpts e_opts;
  auto* embed_cmd = app.add_subcommand("embed", "prefix embedding along an admissible order");
  embed_cmd->add_option("space", e_path)->required();
  embed_cmd->add_option("--order", e_order, "'auto' or comma-separated labels");
  add_common(embed_cmd, e_opts);

  // extend
  std::string x_family, x_source, x_new_point;
  CommonOpts x_opts;
  auto* extend_cmd =
      app.add_subcommand("extend", "extend a family by one point or to a whole space");
  extend_cmd->add_option("family", x_family)->required();
  extend_cmd->add_option("--source", x_source, "space to extend the embedding to");
  extend_cmd->add_option("--new-point", x_new_point, "'label:d1,d2,...' declared distances");
  add_common(extend_cmd, x_opts);

  // verify
  std::string vf_family, vf_source;
  CommonOpts vf_opts;
  auto* verify_cmd = app.add_subcommand("verify", "recompute all pairwise ugh values");
  verify_cmd->add_option("family", vf_family)->required();
  verify_cmd->add_option("--source", vf_source, "source space (defaults to the family's)");
  add_common(verify_cmd, vf_opts);

  // gen
  std::size_t g_n = 0;
  std::string g_heights;
  std::uint64_t g_seed = 0;
  std::size_t g_max_arity = 3;
  CommonOpts g_opts;
  auto* gen_cmd = app.add_subcommand("gen", "seeded random ultrametric space");
  gen_cmd->add_option("--n", g_n)->required();
  gen_cmd->add_option("--heights", g_heights, "allowed positive spectrum values")->required();
  gen_cmd->add_option("--seed", g_seed);
  gen_cmd->add_option("--max-arity", g_max_arity);
  add_common(gen_cmd, g_opts);

  // linkage
  std::string l_path, l_labels;
  CommonOpts l_opts;
  auto* linkage_cmd =
      app.add_subcommand("linkage", "cophenetic distances of a linkage table (CSV or JSON)");
  linkage_cmd->add_option("table", l_path)->required();
  linkage_cmd->add_option("--labels", l_labels, "comma-separated leaf labels");
  add_common(linkage_cmd, l_opts);

  // render
  std::string r_path, r_order = "auto", r_format = "svg";
  CommonOpts r_opts;
  auto* render_cmd = app.add_subcommand("render", "draw the dendrogram (svg or ascii)");
  render_cmd->add_option("space", r_path)->required();
  render_cmd->add_option("--order", r_order, "'auto' or comma-separated labels");
  render_cmd->add_option("--format", r_format, "svg or ascii");
  add_common(render_cmd, r_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(v_path, v_opts);
    if (spectrum_cmd->parsed()) return cmd_spectrum(sp_path, sp_above, sp_opts);
    if (quotient_cmd->parsed()) return cmd_quotient(q_path, q_level, q_opts);
    if (canon_cmd->parsed()) return cmd_canon(c_paths, c_opts);
    if (ugh_cmd->parsed()) return cmd_ugh(u_a, u_b, u_scan, u_lb, u_opts);
    if (order_cmd->parsed()) return cmd_order(o_path, o_sequence, o_check, o_order, o_opts);
    if (embed_cmd->parsed()) return cmd_embed(e_path, e_order, e_opts);
    if (extend_cmd->parsed()) return cmd_extend(x_family, x_source, x_new_point, x_opts);
    if (verify_cmd->parsed()) return cmd_verify(vf_family, vf_source, vf_opts);
    if (gen_cmd->parsed()) return cmd_gen(g_n, g_heights, g_seed, g_max_arity, g_opts);
    if (linkage_cmd->parsed()) return cmd_linkage(l_path, l_labels, l_opts);
    if (render_cmd->parsed()) return cmd_render(r_path, r_order, r_format, r_opts);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
