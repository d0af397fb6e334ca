#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "msl/error.hpp"
#include "msl/io.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<int> max_d;
  std::optional<std::size_t> max_cells;
  bool verbose = false;
  std::string out;
  std::string input;
  int hurwitz_degree = 0;
  std::string profiles;
};

void log_line(const std::string& s) { std::cerr << "msl: " << s << "\n"; }

void emit(const Options& o, const msl::Json& j) {
  const std::string text = msl::dump(j);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw msl::InputError("cannot write " + o.out);
  f << text;
}

msl::JobConfig load_config(const Options& o) {
  if (o.config.empty()) throw msl::InputError("--config is required");
  const std::filesystem::path p = o.config;
  msl::JobConfig c = msl::config_from_json(msl::load_json(p), p.parent_path());
  if (o.max_d) c.max_d = *o.max_d;
  if (o.max_cells) c.max_cells = *o.max_cells;
  return c;
}

msl::ModuliComplex build_from(const msl::JobConfig& c, const Options& o) {
  msl::BuildOptions b;
  b.enumerate.max_cells = c.max_cells;
  b.enumerate.max_degree = c.max_d;
  b.enumerate.max_leaves = c.max_n;
  b.hurwitz.max_degree = c.max_d;
  if (o.verbose) b.enumerate.log = log_line;
  msl::ModuliComplex m = msl::build_complex(c.target, c.degree, b);
  if (o.verbose) {
    const int top = m.dimension();
    for (int i : m.cells_of_dimension(top))
      if (m.cells[i].weight == 0) log_line("zero-weight cell " + std::to_string(i) + ": " + msl::describe(m.cells[i].type));
  }
  return m;
}

int cmd_validate_target(const Options& o) {
  msl::TargetCurve l;
  if (!o.input.empty())
    l = msl::target_from_json(msl::load_json(o.input));
  else
    l = load_config(o).target;
  const auto vs = msl::validate_smooth(l);
  emit(o, msl::to_json(vs));
  return vs.empty() ? 0 : 1;
}

int cmd_hurwitz(const Options& o) {
  const msl::Json j = msl::parse_json("[" + o.profiles + "]");
  msl::HurwitzProblem p;
  p.degree = o.hurwitz_degree;
  for (const auto& mu : j) {
    if (!mu.is_array()) throw msl::InputError("profiles must be lists of parts, e.g. \"[2],[1,1],[2]\"");
    msl::Partition part;
    for (const auto& x : mu) {
      if (!x.is_number_integer()) throw msl::InputError("parts must be integers");
      part.push_back(x.get<int>());
    }
    p.profiles.push_back(std::move(part));
  }
  msl::HurwitzOptions h;
  if (o.max_d) h.max_degree = *o.max_d;
  const msl::Rational v = msl::hurwitz_number_marked(p, h);
  const std::string text = v.get_str() + "\n";
  if (o.out.empty())
    std::cout << text;
  else
    std::ofstream(o.out) << text;
  return 0;
}

int cmd_local_fan(const Options& o) {
  if (o.input.empty()) throw msl::InputError("local-fan needs a star JSON file");
  const msl::VertexStar s = msl::star_from_json(msl::load_json(o.input));
  msl::HurwitzOptions h;
  if (o.max_d) h.max_degree = *o.max_d;
  const msl::LocalFan f = msl::compute_local_fan(s, h);
  if (o.verbose)
    for (const auto& r : f.rays)
      if (r.weight == 0) log_line("zero-weight ray " + msl::to_string(r.resolution));
  emit(o, msl::to_json(f));
  return f.balance.balanced ? 0 : 1;
}

int cmd_build(const Options& o) {
  const msl::JobConfig c = load_config(o);
  const msl::ModuliComplex m = build_from(c, o);
  const msl::BalanceReport rep = msl::check_global_balancing(m);
  emit(o, msl::to_json(m, &rep));
  std::cerr << msl::summary_line(m) << " (expected dimension " << m.expected_dimension << ", "
            << (m.pure ? "pure" : "not pure") << ", " << (rep.balanced ? "balanced" : "not balanced") << ")\n";
  return m.pure && rep.balanced ? 0 : 1;
}

int cmd_check_balance(const Options& o) {
  msl::ModuliComplex m;
  if (!o.input.empty())
    m = msl::complex_from_json(msl::load_json(o.input));
  else
    m = build_from(load_config(o), o);
  const msl::BalanceReport rep = msl::check_global_balancing(m);
  emit(o, msl::to_json(rep, m));
  if (!rep.balanced)
    for (const auto& e : rep.entries)
      if (!e.balanced) log_line("unbalanced at cell " + std::to_string(e.face) + ": " + msl::describe(m.cells[e.face].type));
  return rep.balanced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical moduli spaces of stable maps to a smooth curve"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "job configuration JSON");
  app.add_option("--max-d", o.max_d, "largest local degree handed to the Hurwitz counter");
  app.add_option("--max-cells", o.max_cells, "largest number of cells to enumerate");
  app.add_flag("--verbose", o.verbose, "log pruned types and zero-weight cells to stderr");
  app.add_option("--out", o.out, "write the result to a file instead of stdout");

  auto* vt = app.add_subcommand("validate-target", "check that a target curve is smooth");
  vt->add_option("target", o.input, "target JSON file");
  auto* hw = app.add_subcommand("hurwitz", "marked Hurwitz number of a rigid local problem");
  hw->add_option("degree", o.hurwitz_degree)->required();
  hw->add_option("profiles", o.profiles, "e.g. \"[2],[1,1],[2]\"")->required();
  auto* lf = app.add_subcommand("local-fan", "one-dimensional local fan of a vertex star");
  lf->add_option("star", o.input, "star JSON file");
  auto* bd = app.add_subcommand("build", "build the weighted moduli complex");
  auto* cb = app.add_subcommand("check-balance", "check balancing of a complex or a configuration");
  cb->add_option("complex", o.input, "complex JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*vt) return cmd_validate_target(o);
    if (*hw) return cmd_hurwitz(o);
    if (*lf) return cmd_local_fan(o);
    if (*bd) return cmd_build(o);
    if (*cb) return cmd_check_balance(o);
  } catch (const msl::BoundExceeded& e) {
    std::cerr << "msl: bound exceeded: " << e.what() << " (partial count " << e.partial_count() << ")\n";
    return 3;
  } catch (const msl::InputError& e) {
    std::cerr << "msl: input error: " << e.what() << "\n";
    return 2;
  } catch (const msl::DomainError& e) {
    std::cerr << "msl: " << e.what() << "\n";
    return 1;
  } catch (const msl::Error& e) {
    std::cerr << "msl: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
