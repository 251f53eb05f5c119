#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "blocksieve/analyzer.hpp"
#include "blocksieve/block_json.hpp"
#include "blocksieve/errors.hpp"
#include "blocksieve/rules.hpp"
#include "blocksieve/solver.hpp"

namespace blocksieve::cli {
namespace {

enum class Format { Text, Json, Csv, Markdown };

struct Options {
  Dim dim = 0;
  Dim group_order = 0;
  int t_max = 0;
  bool nsp = false;
  bool auto_nsp = false;
  bool ncs = false;
  std::optional<int> max_level;
  std::optional<int> max_d;
  std::string format = "text";
  unsigned jobs = 1;
  std::string input;

  [[nodiscard]] ModeFlags flags() const {
    ModeFlags f;
    f.non_cosemisimple = ncs;
    f.no_skew_primitives = nsp;
    f.auto_nsp = auto_nsp;
    return f.normalized();
  }

  [[nodiscard]] Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    if (format == "markdown") return Format::Markdown;
    return Format::Text;
  }
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render(const Table& t, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return;
  }
  if (format == Format::Markdown) {
    auto line = [&](const std::vector<std::string>& cells) {
      out << "|";
      for (const auto& c : cells) out << " " << c << " |";
      out << "\n";
    };
    line(t.header);
    out << "|";
    for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
    out << "\n";
    for (const auto& row : t.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    out << s << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s + "}";
}

template <typename T>
std::vector<std::string> strings(const std::vector<T>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(std::to_string(v));
  return out;
}

Table block_table(const BlockSystem& s) {
  Table t{{"level", "d1", "d2", "dim"}, {}};
  if (!s.contains({0, 1, 1}) && s.group_order() > 0) {
    t.rows.push_back({"0", "1", "1", std::to_string(s.group_order())});
  }
  for (const auto& [index, dim] : s.blocks()) {
    t.rows.push_back({std::to_string(index.level), std::to_string(index.d1),
                      std::to_string(index.d2), std::to_string(dim)});
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Regime header; CSV only carries it when auto-nsp asked for it.
void regime_header(const Options& o, const std::string& regime, std::ostream& out) {
  const Format f = o.fmt();
  if (f == Format::Text || f == Format::Markdown) {
    out << "regime: " << regime << "\n";
    if (f == Format::Markdown) out << "\n";
  } else if (f == Format::Csv && o.auto_nsp) {
    out << "# regime: " << regime << "\n";
  }
}

std::string regime_label(const ModeFlags& flags) {
  if (flags.no_skew_primitives) {
    return "no nontrivial skew-primitives (assumed; conclusions conditional on no "
           "nontrivial skew-primitives)";
  }
  if (flags.non_cosemisimple) return "non-cosemisimple, skew-primitives allowed";
  return "unrestricted (cosemisimple allowed)";
}

SolverOptions solver_options(const Options& o) {
  SolverOptions opts = SolverOptions::from_env();
  opts.jobs = std::max(1U, o.jobs);
  return opts;
}

FeasibilityProblem problem(const Options& o, Dim n, Dim r) {
  FeasibilityProblem p{n, r, o.flags(), std::nullopt};
  if (o.max_level || o.max_d) {
    GridBounds b = GridBounds::defaults(n, r);
    if (o.max_level) b.max_level = *o.max_level;
    if (o.max_d) b.max_d = *o.max_d;
    p.bounds = b;
  }
  return p;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const auto lb = lower_bound(o.group_order);
  switch (o.fmt()) {
    case Format::Json: {
      ordered_json j;
      j["group_order"] = o.group_order;
      j["n_min"] = lb.n_min;
      j["argmin"] = lb.argmin;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      out << "N_min = " << lb.n_min << ", d in " << braces(strings(lb.argmin)) << "\n";
      break;
    default:
      render({{"r", "N_min", "argmin"},
              {{std::to_string(o.group_order), std::to_string(lb.n_min), braces(strings(lb.argmin))}}},
             o.fmt(), out);
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  const BlockSystem s = parse_block_system(read_file(o.input));
  const auto report = check(s, o.flags());
  switch (o.fmt()) {
    case Format::Json: {
      ordered_json j;
      j["passes"] = report.empty();
      j["total_dim"] = total_dim(s);
      j["violations"] = report_to_json(report);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Text:
      out << "regime: " << regime_label(o.flags()) << "\n";
      out << "total dim = " << total_dim(s) << ", r = " << s.group_order() << "\n";
      for (const auto& v : report) out << explain(v) << "\n";
      out << (report.empty() ? "pass: no violations" : std::to_string(report.size()) + " violation(s)")
          << "\n";
      break;
    default: {
      Table t{{"rule", "indices", "message"}, {}};
      for (const auto& v : report) {
        std::string idx;
        for (const auto& i : v.indices) idx += (idx.empty() ? "" : " ") + to_string(i);
        t.rows.push_back({std::string(to_string(v.rule)), idx, v.message});
      }
      render(t, o.fmt(), out);
    }
  }
  return report.empty() ? 0 : 1;
}

void certificate_text(const Certificate& c, std::ostream& out) {
  out << "N = " << c.target_dim << ", r = " << c.group_order << ": " << to_string(c.verdict) << "\n";
  if (!c.reason.empty()) out << "reason: " << c.reason << "\n";
  out << "search: nodes=" << c.stats.nodes << " leaves=" << c.stats.leaves
      << " cases=" << c.stats.cases << " closures: " << c.closing_summary() << "\n";
  if (c.witness) {
    out << "witness (total " << total_dim(*c.witness) << "):\n";
    for (const auto& [index, dim] : c.witness->blocks()) {
      out << "  " << to_string(index) << " = " << dim << "\n";
    }
    return;
  }
  for (const auto& t : c.refutation) {
    out << "case " << t.label << ": closed by " << t.closed_by << " (" << t.nodes << " nodes)\n";
  }
  if (c.omitted_cases > 0) out << "... " << c.omitted_cases << " more cases\n";
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Certificate c = solve(problem(o, o.dim, o.group_order), solver_options(o));
  if (o.fmt() == Format::Json) {
    out << certificate_to_json(c).dump(2) << "\n";
  } else {
    regime_header(o, c.regime, out);
    if (o.fmt() == Format::Text) {
      certificate_text(c, out);
    } else if (c.witness) {
      render(block_table(*c.witness), o.fmt(), out);
    } else {
      Table t{{"case", "closed_by", "nodes"}, {}};
      if (!c.reason.empty()) t.rows.push_back({"all", c.reason, "0"});
      for (const auto& tr : c.refutation) {
        t.rows.push_back({tr.label, tr.closed_by, std::to_string(tr.nodes)});
      }
      render(t, o.fmt(), out);
    }
  }
  return c.feasible() ? 0 : 1;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const auto rows = scan(o.group_order, o.t_max, o.flags(), solver_options(o));
  std::vector<int> excluded;
  for (const auto& row : rows) {
    if (!row.certificate.feasible()) excluded.push_back(row.t);
  }
  if (o.fmt() == Format::Json) {
    ordered_json j;
    j["group_order"] = o.group_order;
    j["t_max"] = o.t_max;
    auto list = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json item;
      item["t"] = row.t;
      item["N"] = row.target_dim;
      item["verdict"] = std::string(to_string(row.certificate.verdict));
      item["summary"] = row.certificate.closing_summary();
      item["regime"] = row.certificate.regime;
      if (row.certificate.witness) item["witness"] = block_system_to_json(*row.certificate.witness);
      list.push_back(std::move(item));
    }
    j["rows"] = std::move(list);
    j["excluded"] = excluded;
    out << j.dump(2) << "\n";
    return 0;
  }
  std::string regime = rows.empty() ? regime_label(o.flags()) : rows.front().certificate.regime;
  if (o.auto_nsp) {
    std::vector<std::string> derived;
    for (const auto& row : rows) {
      if (row.certificate.regime.find("(derived") != std::string::npos) {
        derived.push_back(std::to_string(row.t));
      }
    }
    regime = "auto-nsp; no nontrivial skew-primitives derived for t in " + braces(derived) +
             ", otherwise " + regime_label(o.flags());
  }
  regime_header(o, regime, out);
  Table t{{"t", "N", "verdict", "summary"}, {}};
  for (const auto& row : rows) {
    t.rows.push_back({std::to_string(row.t), std::to_string(row.target_dim),
                      std::string(to_string(row.certificate.verdict)),
                      row.certificate.closing_summary()});
  }
  render(t, o.fmt(), out);
  if (o.fmt() == Format::Text) out << "excluded t: " << braces(strings(excluded)) << "\n";
  return 0;
}

int cmd_orders(const Options& o, std::ostream& out) {
  const auto survey = survey_group_orders(o.dim, o.flags(), solver_options(o));
  std::vector<Dim> admissible;
  for (const auto& [r, cert] : survey) {
    if (cert.feasible()) admissible.push_back(r);
  }
  if (o.fmt() == Format::Json) {
    ordered_json j;
    j["dim"] = o.dim;
    auto list = ordered_json::array();
    for (const auto& [r, cert] : survey) {
      list.push_back({{"r", r},
                      {"verdict", std::string(to_string(cert.verdict))},
                      {"summary", cert.closing_summary()},
                      {"regime", cert.regime}});
    }
    j["surveyed"] = std::move(list);
    j["admissible"] = admissible;
    out << j.dump(2) << "\n";
  } else {
    if (o.auto_nsp) {
      std::vector<std::string> derived;
      for (const auto& [r, cert] : survey) {
        if (cert.regime.find("(derived") != std::string::npos) derived.push_back(std::to_string(r));
      }
      regime_header(o, "auto-nsp; no nontrivial skew-primitives derived for r in " +
                           braces(derived) + ", otherwise " + regime_label(o.flags()),
                    out);
    } else {
      regime_header(o, regime_label(o.flags()), out);
    }
    Table t{{"r", "verdict", "summary"}, {}};
    for (const auto& [r, cert] : survey) {
      t.rows.push_back({std::to_string(r), std::string(to_string(cert.verdict)), cert.closing_summary()});
    }
    render(t, o.fmt(), out);
    if (o.fmt() == Format::Text) out << "admissible group orders: " << braces(strings(admissible)) << "\n";
  }
  return admissible.empty() ? 1 : 0;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Coalgebra c = parse_coalgebra(read_file(o.input));
  const AnalysisResult res = analyze(c, o.flags());
  switch (o.fmt()) {
    case Format::Json:
      out << analysis_to_json(res).dump(2) << "\n";
      break;
    case Format::Text: {
      out << "dim C = " << res.dim << "\n";
      std::vector<std::string> dims;
      for (auto d : res.filtration.dims()) dims.push_back(std::to_string(d));
      out << "coradical filtration dims: [";
      for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? ", " : "") << dims[i];
      out << "]\n";
      out << "simple components:";
      for (const auto& comp : res.components) {
        out << " " << comp.label << " (d=" << comp.d << (comp.grouplike() ? ", grouplike)" : ")");
      }
      out << "\n";
      if (!res.q_table.empty()) {
        out << "q-table:\n";
        for (const auto& [key, value] : res.q_table) {
          const auto [level, tau, mu] = key;
          out << "  n=" << level << " (" << res.components[tau].label << ", "
              << res.components[mu].label << "): " << value << "\n";
        }
      }
      out << "block system (r = " << res.block_system.group_order() << "):\n";
      for (const auto& [index, dim] : res.block_system.blocks()) {
        out << "  " << to_string(index) << " = " << dim << "\n";
      }
      for (const auto& v : res.rule_report) out << explain(v) << "\n";
      out << "verdict: " << res.verdict_line() << "\n";
      break;
    }
    default:
      render(block_table(res.block_system), o.fmt(), out);
  }
  return res.passes() ? 0 : 1;
}

void add_mode_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--no-skew-primitives", o.nsp,
                "assume no nontrivial skew-primitives (implies --non-cosemisimple)");
  cmd->add_flag("--non-cosemisimple", o.ncs, "require a block above level 0");
  cmd->add_flag("--auto-nsp", o.auto_nsp,
                "assume no nontrivial skew-primitives when gcd(r, N/r) = 1");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Block-system admissibility checks for finite-dimensional coalgebras", "blocksieve"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "smallest dimension of a non-cosemisimple candidate");
  bound->add_option("--group-order", o.group_order, "r")->required()->check(CLI::PositiveNumber);
  add_format(bound, o);

  auto* chk = app.add_subcommand("check", "evaluate every rule on a block-system JSON file");
  chk->add_option("input", o.input, "block-system JSON")->required();
  add_mode_flags(chk, o);
  add_format(chk, o);

  auto* slv = app.add_subcommand("solve", "decide whether some block system fits (N, r)");
  slv->add_option("--dim", o.dim, "N")->required()->check(CLI::PositiveNumber);
  slv->add_option("--group-order", o.group_order, "r")->required()->check(CLI::PositiveNumber);
  slv->add_option("--max-level", o.max_level, "highest filtration level searched");
  slv->add_option("--max-d", o.max_d, "largest simple-comodule dimension searched");
  slv->add_option("--jobs", o.jobs, "worker threads");
  add_mode_flags(slv, o);
  add_format(slv, o);

  auto* scn = app.add_subcommand("scan", "solve N = t r for t = 1..t-max");
  scn->add_option("--group-order", o.group_order, "r")->required()->check(CLI::PositiveNumber);
  scn->add_option("--t-max", o.t_max, "largest t")->required()->check(CLI::PositiveNumber);
  scn->add_option("--jobs", o.jobs, "worker threads");
  add_mode_flags(scn, o);
  add_format(scn, o);

  auto* ord = app.add_subcommand("orders", "group orders r | N, r < N, that admit a block system");
  ord->add_option("--dim", o.dim, "N")->required()->check(CLI::PositiveNumber);
  ord->add_option("--jobs", o.jobs, "worker threads");
  add_mode_flags(ord, o);
  add_format(ord, o);

  auto* ana = app.add_subcommand("analyze", "coradical filtration and block system of a coalgebra");
  ana->add_option("input", o.input, "coalgebra JSON")->required();
  add_mode_flags(ana, o);
  add_format(ana, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*bound) return cmd_bound(o, out);
    if (*chk) return cmd_check(o, out);
    if (*slv) return cmd_solve(o, out);
    if (*scn) return cmd_scan(o, out);
    if (*ord) return cmd_orders(o, out);
    if (*ana) return cmd_analyze(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace blocksieve::cli
