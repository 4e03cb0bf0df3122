#include "fusionburnside/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionburnside/burnside.hpp"
#include "fusionburnside/catalog.hpp"
#include "fusionburnside/error.hpp"
#include "fusionburnside/fusion.hpp"
#include "fusionburnside/io.hpp"
#include "fusionburnside/stablesets.hpp"

namespace fusionburnside {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> const kSubcommands = {"marks",     "classes", "fusion", "alpha",
                                               "decompose", "verify",  "demo"};

struct Input
{
  std::string name;
  Group group;
  int prime = 2;
};

Input resolve_input(RunConfig const &config)
{
  if (!config.group_file.empty() && !config.catalog_name.empty())
    throw InputError("--group and --catalog are mutually exclusive");
  if (config.group_file.empty() && config.catalog_name.empty())
    throw InputError("one of --group FILE or --catalog NAME is required");

  Input in;
  if (!config.catalog_name.empty()) {
    auto const &entry = catalog_lookup(config.catalog_name);
    in.name = entry.name;
    in.group = entry.spec().build();
    in.prime = config.prime.value_or(entry.prime);
  } else {
    in.name = "S";
    in.group = read_group_file(config.group_file).build();
    if (config.prime) {
      in.prime = *config.prime;
    } else {
      // Default to the prime of a p-group.
      auto n = static_cast<std::int64_t>(in.group.order());
      std::int64_t p = 2;
      while (p <= n && n % p != 0)
        ++p;
      if (n == 1 || p_part(n, p) != n)
        throw InputError("--prime is required unless the group is a p-group");
      in.prime = static_cast<int>(p);
    }
  }
  if (!is_prime(in.prime))
    throw InputError(std::to_string(in.prime) + " is not prime");
  return in;
}

std::string join(std::vector<std::string> const &parts, std::string const &sep)
{
  std::string r;
  for (std::size_t i = 0; i < parts.size(); ++i)
    r += (i ? sep : "") + parts[i];
  return r;
}

std::string element_list(Subgroup const &h)
{
  std::vector<std::string> parts;
  for (Index x : h.elements())
    parts.push_back(h.parent().element(x).to_cycle_string());
  return join(parts, " ");
}

void print_table(std::ostream &out, std::vector<std::vector<std::string>> const &rows)
{
  if (rows.empty())
    return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (auto const &r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  for (auto const &r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size())
        line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void write_rows_csv(std::ostream &out, std::vector<std::vector<std::string>> const &rows)
{
  for (auto const &r : rows)
    out << join(r, ",") << '\n';
}

// -- subcommands -------------------------------------------------------------

int cmd_classes(RunConfig const &config, FusionData const &f, std::ostream &out)
{
  auto const &t = f.table();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"label", "order", "class_size", "normalizer_order",
                                     "weyl_order"};
  if (config.verbose)
    header.push_back("representative");
  rows.push_back(header);
  Json json = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto const &c = t[i];
    std::vector<std::string> row = {t.label(i), std::to_string(c.order()),
                                    std::to_string(c.members.size()),
                                    std::to_string(c.normalizer_order),
                                    std::to_string(c.weyl_order())};
    if (config.verbose)
      row.push_back(element_list(c.representative));
    rows.push_back(row);
    Json entry = {{"order", c.order()},
                  {"class_size", c.members.size()},
                  {"normalizer_order", c.normalizer_order},
                  {"weyl_order", c.weyl_order()}};
    if (config.verbose)
      entry["representative"] = element_list(c.representative);
    json[t.label(i)] = entry;
  }
  if (config.format == "csv")
    write_rows_csv(out, rows);
  else if (config.format == "json")
    out << json.dump(2) << '\n';
  else
    print_table(out, rows);
  return 0;
}

int cmd_marks(RunConfig const &config, FusionData const &f, std::ostream &out)
{
  auto const &t = f.table();
  auto const &m = f.ring()->marks();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"mark"};
  for (auto const &l : t.labels())
    header.push_back(l);
  rows.push_back(header);
  Json json = Json::object();
  for (std::size_t q = 0; q < t.size(); ++q) {
    std::vector<std::string> row = {t.label(q)};
    Json jrow = Json::object();
    for (std::size_t p = 0; p < t.size(); ++p) {
      row.push_back(std::to_string(m(q, p)));
      jrow[t.label(p)] = m(q, p);
    }
    rows.push_back(row);
    json[t.label(q)] = jrow;
  }
  if (config.format == "csv")
    write_rows_csv(out, rows);
  else if (config.format == "json")
    out << json.dump(2) << '\n';
  else
    print_table(out, rows);
  return 0;
}

std::vector<std::string> member_labels(FusionData const &f, std::size_t fc)
{
  std::vector<std::string> labels;
  for (auto s : f.members(fc))
    labels.push_back(f.table().label(s) + (s == f.representative(fc) ? "*" : ""));
  return labels;
}

int cmd_fusion(RunConfig const &config, FusionData const &f, std::ostream &out)
{
  auto const &t = f.table();
  if (config.format == "csv") {
    out << "fclass,members,representative\n";
    for (std::size_t fc = 0; fc < f.size(); ++fc) {
      std::vector<std::string> m;
      for (auto s : f.members(fc))
        m.push_back(t.label(s));
      out << f.label(fc) << ',' << join(m, " ") << ',' << t.label(f.representative(fc))
          << '\n';
    }
  } else if (config.format == "json") {
    Json json = Json::object();
    for (std::size_t fc = 0; fc < f.size(); ++fc) {
      std::vector<std::string> m;
      for (auto s : f.members(fc))
        m.push_back(t.label(s));
      json[f.label(fc)] = {{"members", m},
                           {"representative", t.label(f.representative(fc))}};
    }
    out << json.dump(2) << '\n';
  } else {
    for (std::size_t fc = 0; fc < f.size(); ++fc) {
      out << "[" << f.label(fc) << "]_F: " << join(member_labels(f, fc), " ");
      if (config.verbose)
        out << "  {" << element_list(t[f.representative(fc)].representative) << "}";
      out << '\n';
    }
  }
  return 0;
}

int cmd_alpha(RunConfig const &config, std::string const &name, FusionData const &f,
              std::ostream &out)
{
  auto const basis = alpha_basis(f);
  auto const &t = f.table();
  if (config.format == "csv") {
    out << "fclass,representative," << join(t.labels(), ",") << '\n';
    for (std::size_t fc = 0; fc < f.size(); ++fc) {
      out << f.label(fc) << ',' << t.label(f.representative(fc));
      for (auto c : basis.alphas[fc].coeffs())
        out << ',' << c;
      out << '\n';
    }
  } else if (config.format == "json") {
    Json json = Json::object();
    for (std::size_t fc = 0; fc < f.size(); ++fc) {
      Json coeffs = Json::object();
      for (std::size_t s = 0; s < t.size(); ++s)
        coeffs[t.label(s)] = basis.alphas[fc][s];
      json[f.label(fc)] = {{"representative", t.label(f.representative(fc))},
                           {"coefficients", coeffs}};
    }
    out << json.dump(2) << '\n';
  } else {
    for (std::size_t fc = 0; fc < f.size(); ++fc) {
      auto marks = mark(basis.alphas[fc]);
      out << "alpha[" << f.label(fc) << "] (rep " << t.label(f.representative(fc))
          << ") = " << basis.alphas[fc].to_string(name) << '\n';
      if (config.verbose) {
        std::vector<std::string> m;
        for (auto v : marks.marks())
          m.push_back(std::to_string(v));
        out << "  marks: " << join(m, " ") << '\n';
      }
    }
  }
  return 0;
}

int cmd_decompose(RunConfig const &config, std::string const &name, FusionData const &f,
                  std::ostream &out, std::ostream &err)
{
  if (config.element_file.empty())
    throw InputError("decompose requires --element FILE");
  auto coeffs = parse_row_csv(read_text_file(config.element_file), f.table());
  BurnsideElement x(f.ring(), coeffs);

  if (auto v = find_stability_violation(x, f)) {
    auto const &t = f.table();
    err << "not F-stable: [" << t.label(v->first) << "] and [" << t.label(v->second)
        << "] are F-conjugate but Phi[" << t.label(v->first) << "]=" << v->first_mark
        << " != Phi[" << t.label(v->second) << "]=" << v->second_mark << '\n';
    return 1;
  }

  auto const basis = alpha_basis(f);
  auto lambda = decompose(x, basis);
  std::vector<std::string> labels;
  for (std::size_t fc = 0; fc < f.size(); ++fc)
    labels.push_back(f.label(fc));

  if (config.format == "csv") {
    out << format_row_csv(labels, lambda);
  } else if (config.format == "json") {
    Json json = Json::object();
    for (std::size_t fc = 0; fc < f.size(); ++fc)
      json[labels[fc]] = lambda[fc];
    out << json.dump(2) << '\n';
  } else {
    std::vector<std::string> terms;
    for (std::size_t fc = 0; fc < f.size(); ++fc)
      if (lambda[fc] != 0)
        terms.push_back((lambda[fc] == 1 ? "" : std::to_string(lambda[fc]) + "*") +
                        "alpha[" + labels[fc] + "]");
    out << x.to_string(name) << " = " << (terms.empty() ? "0" : join(terms, " + "))
        << '\n';
    out << format_row_csv(labels, lambda);
  }
  return 0;
}

void report_rows(std::string const &sequence, SesReport const &r,
                 std::vector<std::vector<std::string>> &rows)
{
  for (auto const &c : r.checks)
    rows.push_back({sequence, c.name, c.passed ? "pass" : "FAIL", c.detail});
}

int cmd_verify(RunConfig const &config, FusionData const &f, std::ostream &out)
{
  SesOptions options;
  options.seed = config.seed;
  auto const group = verify_ses_group(f.ring(), options);
  auto const fusion = verify_ses_fusion(f, options);

  std::vector<std::vector<std::string>> rows;
  report_rows("group", group, rows);
  report_rows("fusion", fusion, rows);

  if (config.format == "csv") {
    out << "sequence,check,result,detail\n";
    write_rows_csv(out, rows);
  } else if (config.format == "json") {
    Json json = Json::object();
    auto dump = [](SesReport const &r) {
      Json checks = Json::object();
      for (auto const &c : r.checks)
        checks[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
      return Json{{"passed", r.passed()},
                  {"obstruction_order", r.obstruction_order},
                  {"checks", checks}};
    };
    json["group"] = dump(group);
    json["fusion"] = dump(fusion);
    out << json.dump(2) << '\n';
  } else {
    out << "|Obs(S)| = " << group.obstruction_order
        << ", |Obs(F)| = " << fusion.obstruction_order << '\n';
    for (auto const &r : rows)
      out << "[" << r[2] << "] " << r[0] << ": " << r[1] << " (" << r[3] << ")\n";
  }
  return group.passed() && fusion.passed() ? 0 : 1;
}

int cmd_demo(RunConfig const &config, std::ostream &out)
{
  auto const s5 = catalog_lookup("S5").spec().build();
  bool ok = true;
  auto check = [&](bool cond, std::string const &what) {
    out << (cond ? "  ok   " : "  FAIL ") << what << '\n';
    ok = ok && cond;
  };

  out << "G = S5 of order " << s5.order() << ", p = 2\n";
  auto const f = fusion_from_group(s5, 2);
  auto const &ring = f.ring();
  Subgroup const &s = f.sylow();
  Subgroup const h = sylow_subgroup(s5, 3);
  Subgroup const k = sylow_subgroup(s5, 5);
  out << "S = Sylow 2-subgroup D8 of order " << s.order() << ": "
      << element_list(s) << '\n';
  out << "H = Sylow 3-subgroup of order " << h.order() << ", K = Sylow 5-subgroup of order "
      << k.order() << "\n\n";
  check(s.order() == 8, "|S| = 8");
  check(h.order() == 3 && k.order() == 5, "|H| = 3 and |K| = 5");

  auto free_orbit = BurnsideElement::basis(ring, ring->rank() - 1);
  auto rh = restrict_ambient(h, s, ring);
  auto rk = restrict_ambient(k, s, ring);
  std::string const dot = "·";
  out << "\n[S5/H] has " << s5.order() / h.order() << " points and restricts to "
      << rh.to_string("D8", dot) << '\n';
  out << "[S5/K] has " << s5.order() / k.order() << " points and restricts to "
      << rk.to_string("D8", dot) << '\n';
  check(rh == 5 * free_orbit, "[S5/H] restricts to 5" + dot + "[D8/1]");
  check(rk == 3 * free_orbit, "[S5/K] restricts to 3" + dot + "[D8/1]");
  auto h3 = 3 * rh;
  auto k5 = 5 * rk;
  out << "3" << dot << "[S5/H] restricts to " << h3.to_string("D8", dot) << '\n';
  out << "5" << dot << "[S5/K] restricts to " << k5.to_string("D8", dot) << '\n';
  check(h3 == 15 * free_orbit && k5 == h3,
        "3" + dot + "[S5/H] and 5" + dot + "[S5/K] both restrict to 15" + dot + "[D8/1]");

  auto marks = mark(free_orbit);
  bool zero_elsewhere = true;
  for (std::size_t q = 0; q + 1 < marks.size(); ++q)
    zero_elsewhere = zero_elsewhere && marks[q] == 0;
  out << "\nPhi_1([D8/1]) = " << marks[marks.size() - 1] << ", Phi_Q([D8/1]) = 0 for Q != 1\n";
  check(marks[marks.size() - 1] == 8 && zero_elsewhere, "Phi_1([D8/1]) = 8, 0 elsewhere");
  check(is_f_stable(free_orbit, f), "[D8/1] is F-stable");

  auto scan = scan_small_index_subgroups(s5, 8);
  std::vector<std::string> realized;
  for (auto i : scan.realized)
    realized.push_back(std::to_string(i));
  out << "\nindices <= 8 realized by subgroups of S5: " << join(realized, ", ") << '\n';
  check(std::find(scan.realized.begin(), scan.realized.end(), 8) == scan.realized.end(),
        "S5 has no subgroup of index 8, so [D8/1] is not a restricted S5-set");

  auto lambda = decompose(15 * free_orbit, f);
  out << "\nF-classes of F_D8(S5):\n";
  RunConfig sub = config;
  sub.format = "text";
  cmd_fusion(sub, f, out);
  out << "\nalpha basis:\n";
  cmd_alpha(sub, "D8", f, out);
  std::vector<std::int64_t> expected(f.size(), 0);
  expected[f.fclass_of(ring->rank() - 1)] = 15;
  out << "\n15" << dot << "[D8/1] decomposes as 15" << dot << "alpha[1:0]\n";
  check(lambda == expected, "15" + dot + "[D8/1] = 15" + dot + "alpha_1 uniquely");

  out << '\n' << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? 0 : 1;
}

} // namespace

int run(RunConfig const &config, std::ostream &out, std::ostream &err)
{
  try {
    if (std::find(kSubcommands.begin(), kSubcommands.end(), config.subcommand) ==
        kSubcommands.end())
      throw InputError("unknown subcommand '" + config.subcommand + "'");
    if (config.format != "text" && config.format != "csv" && config.format != "json")
      throw InputError("format must be text, csv or json");

    if (config.subcommand == "demo")
      return cmd_demo(config, out);

    Input in = resolve_input(config);
    FusionData f = fusion_from_group(in.group, in.prime);
    std::string name = in.name;
    if (f.sylow().order() != in.group.order())
      name = "S";

    if (config.subcommand == "classes")
      return cmd_classes(config, f, out);
    if (config.subcommand == "marks")
      return cmd_marks(config, f, out);
    if (config.subcommand == "fusion")
      return cmd_fusion(config, f, out);
    if (config.subcommand == "alpha")
      return cmd_alpha(config, name, f, out);
    if (config.subcommand == "decompose")
      return cmd_decompose(config, name, f, out, err);
    return cmd_verify(config, f, out);
  } catch (InputError const &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Burnside rings of p-groups and fusion systems", "fusionburnside"};
  RunConfig config;
  int prime = 0;
  app.add_option("subcommand", config.subcommand, "One of: " + join(kSubcommands, ", "))
    ->required()
    ->check(CLI::IsMember(kSubcommands));
  auto *group = app.add_option("--group", config.group_file, "Group file");
  app.add_option("--catalog", config.catalog_name, "Built-in group name")->excludes(group);
  auto *prime_opt = app.add_option("--prime", prime, "Prime p");
  app.add_option("--format", config.format, "Output format")
    ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--seed", config.seed, "Seed for sampled checks");
  app.add_option("--element", config.element_file, "Burnside element CSV");
  app.add_flag("--verbose", config.verbose, "Print representative element lists");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return 0;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }
  if (prime_opt->count() > 0)
    config.prime = prime;
  return run(config, out, err);
}

} // namespace fusionburnside
