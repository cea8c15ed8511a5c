#include "starlike/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "starlike/index.hpp"
#include "starlike/json_io.hpp"
#include "starlike/partition.hpp"
#include "starlike/spectra.hpp"
#include "starlike/verify.hpp"

namespace starlike {

namespace {

enum class Format { text, json, csv };

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void emit(const std::string& rendered, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << rendered;
    return;
  }
  // Write-then-rename keeps a crashed run from leaving a truncated file.
  const std::filesystem::path target(output_path);
  const std::filesystem::path temp(output_path + ".tmp");
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot write '" + temp.string() + "'");
    stream << rendered;
    if (!stream.flush()) throw std::runtime_error("write to '" + temp.string() + "' failed");
  }
  std::filesystem::rename(temp, target);
}

int approx_digits(const Rational& tol) {
  const int digits = static_cast<int>(std::ceil(-std::log10(tol.get_d()) - 1e-9));
  return std::clamp(digits, 1, 18);
}

RootedTree tree_from_edge_file(const std::string& path, int root) {
  std::ifstream stream(path);
  if (!stream) throw std::runtime_error("cannot read '" + path + "'");
  int n = 0;
  if (!(stream >> n)) throw std::runtime_error("'" + path + "': missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int u = 0;
  int v = 0;
  while (stream >> u >> v) edges.emplace_back(u, v);
  return tree_from_edge_list(n, edges, root);
}

std::string render_verify_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << '\n'
      << "n " << report.n << '\n'
      << "pairs_checked " << report.pairs_checked << '\n'
      << "spot_checks " << report.spot_checks << '\n'
      << "type_i " << report.type_i << '\n'
      << "type_ii " << report.type_ii << '\n'
      << "type_iii_alpha_t1_r " << report.type_iii_alpha << '\n'
      << "type_iii_class_reset " << report.type_iii_reset << '\n'
      << "failures " << report.failures.size() << '\n';
  for (const auto& failure : report.failures)
    out << "failure [" << failure.a << "]"
        << (failure.b.empty() ? "" : " [" + failure.b + "]") << " " << failure.predicate << '\n';
  out << "wall_time_seconds " << report.wall_time_seconds << '\n';
  return out.str();
}

std::string render_verify_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "kind,suite,n,pairs_checked,spot_checks,type_i,type_ii,type_iii_alpha_t1_r,"
         "type_iii_class_reset,wall_time_seconds,a,b,predicate\n";
  out << "summary," << report.suite << ',' << report.n << ',' << report.pairs_checked << ','
      << report.spot_checks << ',' << report.type_i << ',' << report.type_ii << ','
      << report.type_iii_alpha << ',' << report.type_iii_reset << ','
      << report.wall_time_seconds << ",,,\n";
  for (const auto& failure : report.failures)
    out << "failure," << report.suite << ',' << report.n << ",,,,,,,," << csv_field(failure.a)
        << ',' << csv_field(failure.b) << ',' << csv_field(failure.predicate) << '\n';
  return out.str();
}

struct EnumerateRow {
  long rank;
  Partition partition;
  std::optional<CoveringKind> kind_to_next;
};

std::string render_enumerate(const std::vector<EnumerateRow>& rows, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::text:
      for (const auto& row : rows) out << row.rank << '\t' << row.partition.str() << '\n';
      break;
    case Format::csv:
      out << "rank,n,r,partition,covering_kind_to_next\n";
      for (const auto& row : rows)
        out << row.rank << ',' << row.partition.n() << ',' << row.partition.r() << ','
            << csv_field(row.partition.str()) << ','
            << (row.kind_to_next ? row.kind_to_next->str() : "") << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json entry{{"rank", row.rank},
                                     {"n", row.partition.n()},
                                     {"r", row.partition.r()},
                                     {"partition", row.partition.str()}};
        entry["covering_kind_to_next"] =
            row.kind_to_next ? nlohmann::ordered_json(row.kind_to_next->str())
                             : nlohmann::ordered_json(nullptr);
        doc.push_back(std::move(entry));
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::optional<CoveringKind> kind_to_next(const Partition& p) {
  const auto next = successor(p);
  if (!next) return std::nullopt;
  return classify_covering(p, *next);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"starlike: certified index ordering of starlike trees"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format / --output trail the subcommand

  Format format = Format::text;
  std::string output_path;
  const std::map<std::string, Format> format_names{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  app.add_option("--output", output_path, "write output to this file atomically");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list partitions in index order");
  int opt_n = 0;
  std::optional<int> opt_r;
  cmd_enumerate->add_option("--n", opt_n, "vertex count")->required();
  cmd_enumerate->add_option("--r", opt_r, "restrict to this branch count");

  auto* cmd_successor = app.add_subcommand("successor", "the next partition and covering kind");
  std::string opt_partition;
  cmd_successor->add_option("--partition", opt_partition, "branch lengths, e.g. 1,2,8")
      ->required();

  auto* cmd_index = app.add_subcommand("index", "certified enclosure of the index");
  std::string opt_index_partition;
  std::string opt_tol = "1/1099511627776";  // 2^-40
  cmd_index->add_option("--partition", opt_index_partition, "branch lengths")->required();
  cmd_index->add_option("--tol", opt_tol, "bracket width, e.g. 1e-6 or 1/1024");

  auto* cmd_compare = app.add_subcommand("compare", "order two trees by index with a witness");
  std::string opt_a;
  std::string opt_b;
  int opt_max_steps = default_compare_steps;
  cmd_compare->add_option("--a", opt_a, "first partition")->required();
  cmd_compare->add_option("--b", opt_b, "second partition")->required();
  cmd_compare->add_option("--max-steps", opt_max_steps, "refinement rounds before giving up");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  int opt_verify_n = 0;
  std::string opt_suite;
  std::optional<int> opt_verify_r;
  int opt_spot = 1000;
  int opt_depth = 40;
  double opt_oracle_tol = 1e-6;
  cmd_verify->add_option("--n", opt_verify_n, "vertex count")->required();
  cmd_verify->add_option("--suite", opt_suite, "main | coverings | b-lemma | oracle")
      ->required()
      ->check(CLI::IsMember({"main", "coverings", "b-lemma", "oracle"}));
  cmd_verify->add_option("--r", opt_verify_r, "restrict the main suite to one branch count");
  cmd_verify->add_option("--spot", opt_spot, "random non-consecutive pairs for the main suite");
  cmd_verify->add_option("--depth", opt_depth, "bracket depth 2^-depth for the b-lemma suite");
  cmd_verify->add_option("--tol", opt_oracle_tol, "allowed disagreement for the oracle suite");

  auto* cmd_diagonalize = app.add_subcommand("diagonalize", "diagonal profile at a given shift");
  std::string opt_diag_partition;
  std::string opt_edges;
  int opt_root = 0;
  std::string opt_alpha;
  cmd_diagonalize->add_option("--partition", opt_diag_partition, "branch lengths");
  cmd_diagonalize->add_option("--edges", opt_edges, "edge list file: n, then n-1 lines 'u v'");
  cmd_diagonalize->add_option("--root", opt_root, "root vertex for --edges input");
  cmd_diagonalize->add_option("--alpha", opt_alpha, "exact shift, e.g. -1 or -5/2")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_enumerate) {
      std::vector<Partition> parts =
          opt_r ? enumerate_omega(opt_n, *opt_r) : enumerate_omega_all(opt_n);
      std::vector<EnumerateRow> rows;
      rows.reserve(parts.size());
      long rank = 0;
      for (auto& p : parts) {
        auto kind = kind_to_next(p);
        rows.push_back({++rank, std::move(p), std::move(kind)});
      }
      emit(render_enumerate(rows, format), output_path, out);
      return 0;
    }

    if (*cmd_successor) {
      const Partition p = Partition::parse(opt_partition);
      const auto next = successor(p);
      std::ostringstream rendered;
      if (format == Format::json) {
        nlohmann::ordered_json doc{{"partition", p.str()}};
        doc["successor"] = next ? nlohmann::ordered_json(next->str()) : nullptr;
        doc["kind"] =
            next ? nlohmann::ordered_json(classify_covering(p, *next).str()) : nullptr;
        rendered << doc.dump(2) << '\n';
      } else if (format == Format::csv) {
        rendered << "partition,successor,kind\n" << csv_field(p.str()) << ',';
        if (next)
          rendered << csv_field(next->str()) << ',' << classify_covering(p, *next).str();
        else
          rendered << ',';
        rendered << '\n';
      } else {
        if (next)
          rendered << next->str() << '\t' << classify_covering(p, *next).str() << '\n';
        else
          rendered << "none\n";
      }
      emit(rendered.str(), output_path, out);
      return 0;
    }

    if (*cmd_index) {
      const Partition p = Partition::parse(opt_index_partition);
      const Rational tol = parse_rational(opt_tol);
      const RootedTree tree = starlike_tree(p);
      const IndexBracket bracket = index_bracket(tree, tol);
      const Rational midpoint = (bracket.lo + bracket.hi) / 2;
      const std::string approx = decimal_string(midpoint, approx_digits(tol));
      std::ostringstream rendered;
      if (format == Format::json) {
        rendered << nlohmann::ordered_json{{"partition", p.str()},
                                           {"approx", approx},
                                           {"lo", to_string(bracket.lo)},
                                           {"hi", to_string(bracket.hi)}}
                        .dump(2)
                 << '\n';
      } else if (format == Format::csv) {
        rendered << "partition,approx,lo,hi\n"
                 << csv_field(p.str()) << ',' << approx << ',' << to_string(bracket.lo) << ','
                 << to_string(bracket.hi) << '\n';
      } else {
        rendered << "approx " << approx << '\n'
                 << "lo " << to_string(bracket.lo) << '\n'
                 << "hi " << to_string(bracket.hi) << '\n';
      }
      emit(rendered.str(), output_path, out);
      return 0;
    }

    if (*cmd_compare) {
      const RootedTree a = starlike_tree(Partition::parse(opt_a));
      const RootedTree b = starlike_tree(Partition::parse(opt_b));
      const auto result = compare_indices(a, b, opt_max_steps);
      std::ostringstream rendered;
      if (format == Format::json) {
        nlohmann::ordered_json doc =
            result ? to_json(*result) : nlohmann::ordered_json{{"verdict", "unresolved"}};
        rendered << doc.dump(2) << '\n';
      } else if (format == Format::csv) {
        rendered << "a,b,verdict,witness\n" << csv_field(opt_a) << ',' << csv_field(opt_b) << ',';
        if (result)
          rendered << (result->verdict == IndexOrder::less ? "less" : "greater") << ','
                   << to_string(result->witness);
        else
          rendered << "unresolved,";
        rendered << '\n';
      } else {
        if (result)
          rendered << (result->verdict == IndexOrder::less ? "less" : "greater") << ' '
                   << to_string(result->witness) << '\n';
        else
          rendered << "unresolved\n";
      }
      emit(rendered.str(), output_path, out);
      return 0;
    }

    if (*cmd_verify) {
      VerificationReport report;
      if (opt_suite == "main") {
        report = verify_main_theorem(opt_verify_n, opt_verify_r, opt_spot);
      } else if (opt_suite == "coverings") {
        report = verify_covering_theorem(opt_verify_n);
      } else if (opt_suite == "oracle") {
        report = verify_oracle_agreement(opt_verify_n, opt_oracle_tol);
      } else {
        report.suite = "b-lemma";
        report.n = opt_verify_n;
        for (const Partition& p : enumerate_omega_all(opt_verify_n)) {
          for (const VerificationReport& part :
               {verify_b_lemma(p, opt_depth), verify_residual_root(p, opt_depth)}) {
            report.pairs_checked += part.pairs_checked;
            report.wall_time_seconds += part.wall_time_seconds;
            report.failures.insert(report.failures.end(), part.failures.begin(),
                                   part.failures.end());
          }
        }
      }
      std::string rendered;
      if (format == Format::json)
        rendered = to_json(report).dump(2) + "\n";
      else if (format == Format::csv)
        rendered = render_verify_csv(report);
      else
        rendered = render_verify_text(report);
      emit(rendered, output_path, out);
      return report.ok() ? 0 : 2;
    }

    if (*cmd_diagonalize) {
      if (opt_diag_partition.empty() == opt_edges.empty())
        throw std::invalid_argument("need exactly one of --partition and --edges");
      const RootedTree tree = opt_edges.empty()
                                  ? starlike_tree(Partition::parse(opt_diag_partition))
                                  : tree_from_edge_file(opt_edges, opt_root);
      const DiagonalProfile profile = diagonalize(tree, parse_rational(opt_alpha));
      std::ostringstream rendered;
      if (format == Format::json) {
        rendered << to_json(profile).dump(2) << '\n';
      } else if (format == Format::csv) {
        rendered << "vertex,value,alpha,neg,zero,pos\n";
        for (std::size_t v = 0; v < profile.values.size(); ++v)
          rendered << v << ',' << to_string(profile.values[v]) << ','
                   << to_string(profile.alpha) << ',' << profile.inertia.neg << ','
                   << profile.inertia.zero << ',' << profile.inertia.pos << '\n';
      } else {
        rendered << "alpha " << to_string(profile.alpha) << '\n'
                 << "inertia " << profile.inertia.neg << ' ' << profile.inertia.zero << ' '
                 << profile.inertia.pos << '\n'
                 << "values";
        for (const Rational& value : profile.values) rendered << ' ' << to_string(value);
        rendered << '\n';
      }
      emit(rendered.str(), output_path, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace starlike
