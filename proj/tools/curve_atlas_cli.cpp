// curve-atlas: existence/irreducibility queries for linearly normal curves,
// solver front ends, atlas grid emission and the tabulated-value regression
// suite.
//
// Exit codes: 0 decided, 1 verification failure, 2 usage error, 3 undecided.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "curveatlas/atlas.hpp"
#include "curveatlas/dimcount.hpp"
#include "curveatlas/solvers.hpp"
#include "curveatlas/verify.hpp"

namespace {

using namespace curveatlas;

const AxiomTable& load_axioms() {
  if (const char* path = std::getenv("CURVE_ATLAS_AXIOMS")) {
    static AxiomTable table = [&] {
      std::ifstream in(path);
      if (!in) throw std::runtime_error(std::string("cannot open axiom table: ") + path);
      std::ostringstream buf;
      buf << in.rdbuf();
      return AxiomTable::parse(buf.str());
    }();
    return table;
  }
  return AxiomTable::paper_defaults();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
}

int cmd_classify(i64 alpha, i64 r, i64 g, bool as_json) {
  const Verdict v = classify_general(alpha, r, g);
  IrreducibilityStatus irr{Irreducibility::Unknown, std::nullopt, ""};
  if (alpha == 5)
    irr = irreducibility_alpha5(r, g);
  else if (v.status == Status::Empty)
    irr = {Irreducibility::Empty, std::nullopt, "mirrors the existence table"};

  if (as_json) {
    std::cout << verdict_json(v, irr);
  } else {
    std::cout << "(d,g,r) = (" << v.triple.d << ',' << v.triple.g << ',' << v.triple.r
              << "), alpha = " << alpha << '\n';
    std::cout << "status: " << to_string(v.status) << '\n';
    if (v.witness) {
      std::cout << "witness: " << to_string(v.witness->kind);
      for (const auto& [k, val] : v.witness->params) std::cout << ' ' << k << '=' << val;
      std::cout << "\n  [" << v.witness->citation << "]\n";
    }
    if (v.obstruction) {
      std::cout << "obstruction:";
      for (const auto& k : v.obstruction->kinds) std::cout << ' ' << to_string(k);
      for (const auto& [k, val] : v.obstruction->params) std::cout << ' ' << k << '=' << val;
      std::cout << "\n  [" << v.obstruction->citation << "]\n";
    }
    std::cout << "irreducibility: " << to_string(irr.value);
    if (irr.component_count) std::cout << " (components: " << *irr.component_count << ')';
    if (!irr.citation.empty()) std::cout << "\n  [" << irr.citation << ']';
    std::cout << '\n';
  }
  return v.status == Status::Unknown ? 3 : 0;
}

int cmd_atlas(i64 alpha, i64 rmax, const std::string& out_dir, const std::string& format) {
  const AtlasGrid grid = build_atlas(alpha, rmax);
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  write_file(dir / "existence.csv", atlas_existence_csv(grid));
  write_file(dir / "existence.json", atlas_existence_json(grid));
  write_file(dir / "irreducibility.csv", atlas_irreducibility_csv(grid));
  write_file(dir / "irreducibility.json", atlas_irreducibility_json(grid));
  if (format == "svg") {
    write_file(dir / "figure1.svg", atlas_existence_svg(grid));
    write_file(dir / "figure2.svg", atlas_irreducibility_svg(grid));
  }
  std::cout << "atlas written to " << out_dir << " (" << grid.cells.size() << " cells)\n";
  return 0;
}

int cmd_verify() {
  const auto results = run_paper_suite();
  std::size_t failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.citation;
    if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << ']';
    std::cout << '\n';
    if (!r.pass) ++failed;
  }
  std::cout << results.size() - failed << '/' << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

void print_dims(bool explain) {
  for (const auto& [label, fd] : paper_family_dims()) {
    std::cout << label << " = " << fd.value << '\n';
    if (explain) std::cout << fd.explain();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-integer atlas of linearly normal curves of given index of speciality"};
  app.require_subcommand(1);

  i64 alpha = 5, r = 0, g = 0;
  bool as_json = false;

  auto* classify = app.add_subcommand("classify", "existence/irreducibility of one (d,g,r)");
  classify->add_option("--alpha", alpha, "index of speciality")->capture_default_str();
  classify->add_option("--r", r, "ambient projective dimension")->required();
  classify->add_option("--g", g, "genus")->required();
  classify->add_flag("--json", as_json, "JSON output");

  i64 rmax = 16;
  std::string out_dir = "atlas_out", format = "csv";
  auto* atlas = app.add_subcommand("atlas", "emit the existence/irreducibility grids");
  atlas->add_option("--alpha", alpha, "index of speciality")->capture_default_str();
  atlas->add_option("--rmax", rmax, "largest r")->capture_default_str();
  atlas->add_option("--out", out_dir, "output directory")->capture_default_str();
  atlas->add_option("--format", format, "csv|json|svg (csv and json always written)")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();

  auto* solve = app.add_subcommand("solve", "curve-class solvers");
  solve->require_subcommand(1);
  i64 sn = 3, sd = 0, sg = 0, sdeg = 0, sself = 0, minb = 0;
  std::string order = "asc";  // asc: ascending leading parameter; desc: descending genus
  auto* scroll = solve->add_subcommand("scroll", "classes aH+bL on a degree-n scroll");
  scroll->add_option("--n", sn)->required();
  scroll->add_option("--d", sd)->required();
  scroll->add_option("--g", sg)->required();
  scroll->add_option("--order", order)->check(CLI::IsMember({"asc", "desc"}));
  scroll->add_flag("--json", as_json);
  auto* cone = solve->add_subcommand("cone", "fiber degree / vertex multiplicity table");
  cone->add_option("--n", sn)->required();
  cone->add_option("--d", sd)->required();
  cone->add_option("--order", order)->check(CLI::IsMember({"asc", "desc"}));
  cone->add_flag("--json", as_json);
  auto* delpezzo = solve->add_subcommand("delpezzo", "classes on the quartic del Pezzo");
  delpezzo->add_option("--deg", sdeg)->required();
  delpezzo->add_option("--self", sself)->required();
  delpezzo->add_option("--min-b", minb, "smallest allowed multiplicity")->capture_default_str();
  delpezzo->add_flag("--json", as_json);
  auto* quadric = solve->add_subcommand("quadric", "types (a,b) on a smooth quadric");
  quadric->add_option("--d", sd)->required();
  quadric->add_option("--g", sg)->required();
  quadric->add_flag("--json", as_json);

  std::string suite = "paper";
  auto* verify = app.add_subcommand("verify", "run the tabulated-value regression suite");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"paper"}));

  bool explain = false;
  auto* dims = app.add_subcommand("dims", "named family-dimension table");
  dims->add_flag("--explain", explain, "print the cited ledger per value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    load_axioms();  // fail early on a broken override table
    if (classify->parsed()) return cmd_classify(alpha, r, g, as_json);
    if (atlas->parsed()) return cmd_atlas(alpha, rmax, out_dir, format);
    if (verify->parsed()) return cmd_verify();
    if (dims->parsed()) {
      print_dims(explain);
      return 0;
    }
    if (scroll->parsed()) {
      auto sols = scroll_solutions(sn, sd, sg);
      if (order == "desc") std::reverse(sols.begin(), sols.end());
      if (as_json) {
        std::cout << "[";
        for (std::size_t i = 0; i < sols.size(); ++i)
          std::cout << (i ? "," : "") << "{\"a\":" << sols[i].a << ",\"b\":" << sols[i].b
                    << ",\"pa\":" << sols[i].pa << '}';
        std::cout << "]\n";
      } else {
        for (const auto& x : sols) std::cout << "(a,b) = (" << x.a << ',' << x.b << ")\n";
        if (sols.empty()) std::cout << "no solutions\n";
      }
      return 0;
    }
    if (cone->parsed()) {
      auto sols = cone_solutions(sn, sd);
      if (order == "desc") std::reverse(sols.begin(), sols.end());
      if (as_json) {
        std::cout << "[";
        for (std::size_t i = 0; i < sols.size(); ++i)
          std::cout << (i ? "," : "") << "{\"k\":" << sols[i].k << ",\"m\":" << sols[i].m
                    << ",\"pa\":" << sols[i].pa << '}';
        std::cout << "]\n";
      } else {
        for (const auto& x : sols)
          std::cout << "(k,m,pa) = (" << x.k << ',' << x.m << ',' << x.pa << ")\n";
        if (sols.empty()) std::cout << "no solutions\n";
      }
      return 0;
    }
    if (delpezzo->parsed()) {
      const auto sols = delpezzo_solutions(sdeg, sself, minb);
      for (const auto& x : sols) {
        std::vector<i64> b(x.b.begin(), x.b.end());
        std::cout << format_blowup_class(blowup_class(x.a, b)) << "  p_a = " << delpezzo_genus(x)
                  << '\n';
      }
      if (sols.empty()) std::cout << "no solutions\n";
      return 0;
    }
    if (quadric->parsed()) {
      const auto sols = quadric_type_solutions(sd, sg);
      for (const auto& [a, b] : sols) std::cout << "type (" << a << ',' << b << ")\n";
      if (sols.empty()) std::cout << "no solutions\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
