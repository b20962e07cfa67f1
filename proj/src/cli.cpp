#include "cpoly/cli.hpp"

#include <cmath>
#include <functional>
#include <ostream>

#include "CLI11.hpp"

#include "cpoly/designs.hpp"
#include "cpoly/error.hpp"
#include "cpoly/finite_field.hpp"
#include "cpoly/inscription.hpp"
#include "cpoly/john.hpp"
#include "cpoly/json_io.hpp"
#include "cpoly/mub.hpp"
#include "cpoly/polytope.hpp"

namespace cpoly::cli {

using Json = nlohmann::json;

Json RunReport::to_json() const {
  Json j{{"command", command},
         {"parameters", parameters},
         {"results", results},
         {"tool_version", tool_version},
         {"pass", pass}};
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

namespace {

struct GlobalOptions {
  std::string output = "json";
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1'000'000;
  unsigned threads = 0;

  double tolerance() const { return tol.value_or(kDefaultTolerances.spectral); }
};

RunReport make_report(const std::string& command, const GlobalOptions& g) {
  RunReport r;
  r.command = command;
  r.parameters["tol"] = g.tolerance();
  return r;
}

RunReport mub_build(const GlobalOptions& g, std::size_t n, const std::string& out_path) {
  RunReport r = make_report("mub build", g);
  r.parameters["n"] = n;
  const MubSet set = build_complete(n);
  const MubReport check = verify_mub(set, g.tolerance());
  r.results["bases"] = set.bases.size();
  r.results["verify"] = mub_report_to_json(check);
  if (out_path.empty()) {
    r.results["mub_set"] = mub_set_to_json(set);
  } else {
    write_json_file(out_path, mub_set_to_json(set));
    r.parameters["out"] = out_path;
  }
  r.pass = check.pass && set.complete();
  return r;
}

RunReport mub_verify(const GlobalOptions& g, const std::string& in_path) {
  RunReport r = make_report("mub verify", g);
  r.parameters["in"] = in_path;
  const MubSet set = mub_set_from_json(read_json_file(in_path));
  const MubReport check = verify_mub(set, g.tolerance());
  r.results["n"] = set.n;
  r.results["bases"] = set.bases.size();
  r.results["complete"] = set.complete();
  r.results["verify"] = mub_report_to_json(check);
  r.pass = check.pass;
  return r;
}

RunReport mub_bound(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("mub bound", g);
  r.parameters["n"] = n;
  r.results["factorization"] = factorization_string(n);
  r.results["lower_bound"] = mub_lower_bound(n);
  r.results["prime_power"] = as_prime_power(n).has_value();
  r.pass = true;
  return r;
}

RunReport polytope_report(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("polytope report", g);
  r.parameters["n"] = n;
  const GeometryReport geo = geometry_report(n);
  r.results = geometry_report_to_json(geo);
  const double nn = static_cast<double>(n);
  const double dim = nn * nn - 1.0;
  // Closed forms for R A / V of both bodies.
  const double rav_poly = std::sqrt(nn - 1.0) * std::pow(dim, 1.5);
  const double rav_body = (nn - 1.0) * dim;
  r.results["ra_over_v_closed_form"] = Json{{"polytope", rav_poly}, {"body", rav_body}};
  r.pass = std::abs(geo.ra_over_v_polytope - rav_poly) <= g.tolerance() * rav_poly &&
           std::abs(geo.ra_over_v_body - rav_body) <= g.tolerance() * rav_body;
  return r;
}

RunReport polytope_volume(const GlobalOptions& g, std::size_t n, const std::string& mode) {
  RunReport r = make_report("polytope volume", g);
  r.parameters["n"] = n;
  r.parameters["mode"] = mode;
  VolumeMode vm;
  if (mode == "cone") vm = VolumeMode::ConeDeterminant;
  else if (mode == "mc") vm = VolumeMode::MonteCarlo;
  else throw InvalidInput("unknown volume mode '" + mode + "' (expected cone or mc)");
  if (vm == VolumeMode::MonteCarlo) {
    r.parameters["samples"] = g.samples;
    r.seed = g.seed;
  }
  const VolumeEstimate est = volume_oracle(n, vm, g.samples, g.seed, g.threads);
  const GeometryReport geo = geometry_report(n);
  const double closed = *geo.v_polytope.value;
  r.results["estimate"] = volume_estimate_to_json(est);
  r.results["closed_form"] = closed;
  if (vm == VolumeMode::ConeDeterminant) {
    r.results["relative_error"] = std::abs(est.value - closed) / closed;
    r.pass = std::abs(est.value - closed) <= 1e-12 * closed;
  } else {
    const double z = est.standard_error > 0 ? std::abs(est.value - closed) / est.standard_error : 0.0;
    r.results["standard_errors_from_closed_form"] = z;
    r.pass = est.hits > 0 && z <= 3.0;
  }
  return r;
}

RunReport polytope_check(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("polytope check", g);
  r.parameters["n"] = n;
  const CPolytope abstract = build_abstract(n);
  const auto abstract_gram = check_gram(abstract, g.tolerance());
  r.results["abstract_gram"] = Json{{"pass", abstract_gram.pass}, {"max_deviation", abstract_gram.max_deviation}};
  bool pass = abstract_gram.pass;
  if (as_prime_power(n)) {
    const CPolytope realized = build_from_mub(build_complete(n), make_traceless_basis(n));
    const auto ga = gram_matrix(abstract);
    const auto gr = gram_matrix(realized);
    double worst = 0.0;
    for (std::size_t i = 0; i < ga.size(); ++i) worst = std::max(worst, std::abs(ga[i] - gr[i]));
    double min_eig = 1.0;
    for (std::size_t l = 0; l <= n; ++l)
      for (std::size_t k = 0; k < n; ++k)
        min_eig = std::min(min_eig, eigenvalues(realized.projector(l, k)).back());
    r.results["gram_equivalence_max_deviation"] = worst;
    r.results["min_corner_eigenvalue"] = min_eig;
    r.results["corners_are_states"] = min_eig >= -g.tolerance();
    pass = pass && worst <= g.tolerance() && min_eig >= -g.tolerance();
  } else {
    r.results["realization"] = factorization_string(n) + " is not a prime power; abstract polytope only";
  }
  r.pass = pass;
  return r;
}

RunReport inscribe_build(const GlobalOptions& g, std::size_t n, const std::string& mols_path) {
  RunReport r = make_report("inscribe", g);
  r.parameters["n"] = n;
  MolsSet mols;
  if (mols_path.empty()) {
    mols = mols_prime_power(n);
  } else {
    r.parameters["mols"] = mols_path;
    mols = mols_from_json(read_json_file(mols_path));
  }
  const PointFaceArray arr = build_point_face_array(n, mols);
  const auto abstract_report = verify_asimplex(build_abstract(n), arr, g.tolerance());
  r.results["array"] = point_face_array_to_json(arr);
  r.results["asimplex_abstract"] = asimplex_report_to_json(abstract_report);
  bool pass = abstract_report.pass;
  if (as_prime_power(n)) {
    const auto realized = build_from_mub(build_complete(n), make_traceless_basis(n));
    const auto realized_report = verify_asimplex(realized, arr, g.tolerance());
    r.results["asimplex_realized"] = asimplex_report_to_json(realized_report);
    pass = pass && realized_report.pass;
  }
  const AffinePlane plane = plane_dictionary(arr);
  const PlaneReport plane_check = verify_affine_plane(plane);
  r.results["plane"] = plane_report_to_json(plane_check);
  r.results["plane_matches_mols_plane"] = same_incidence(plane, mols_to_affine_plane(mols));
  r.pass = pass && plane_check.pass;
  return r;
}

RunReport inscribe_search(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("inscribe search", g);
  r.parameters["n"] = n;
  const auto result = exhaustive_inscription_search(n, g.tolerance());
  r.results["solutions"] = result.solutions;
  if (result.witness) {
    PointFaceArray w{n, *result.witness};
    Json sel = Json::array();
    for (const auto& f : *result.witness) sel.push_back(f.selection);
    r.results["witness"] = sel;
    r.results["witness_asimplex"] = asimplex_report_to_json(*result.witness_report);
  }
  r.results["geometry_agrees"] = result.geometry_agrees;
  bool construction_found = false;
  if (as_prime_power(n)) {
    const auto arr = build_point_face_array(n, mols_prime_power(n));
    std::vector<std::uint64_t> idx;
    for (const auto& f : arr.faces) idx.push_back(point_face_index(n, f));
    std::sort(idx.begin(), idx.end());
    for (const auto& fam : result.families) construction_found = construction_found || fam == idx;
    r.results["construction_found"] = construction_found;
  }
  r.pass = result.solutions > 0 && result.geometry_agrees && (construction_found || !as_prime_power(n));
  return r;
}

RunReport designs_mols(const GlobalOptions& g, std::size_t q) {
  RunReport r = make_report("designs mols", g);
  r.parameters["q"] = q;
  const MolsSet mols = mols_prime_power(q);
  bool orthogonal = true;
  Json witness = nullptr;
  for (std::size_t i = 0; i < mols.squares.size() && orthogonal; ++i)
    for (std::size_t j = i + 1; j < mols.squares.size() && orthogonal; ++j)
      if (!are_orthogonal(mols.squares[i], mols.squares[j])) {
        orthogonal = false;
        witness = Json::array({i, j});
      }
  const PlaneReport plane = verify_affine_plane(mols_to_affine_plane(mols));
  r.results["mols"] = mols_to_json(mols);
  r.results["pairwise_orthogonal"] = orthogonal;
  r.results["non_orthogonal_pair"] = witness;
  r.results["affine_plane"] = plane_report_to_json(plane);
  r.pass = orthogonal && plane.pass;
  return r;
}

const char* status_name(MateResult::Status s) {
  switch (s) {
    case MateResult::Status::Found: return "mate";
    case MateResult::Status::NoneProof: return "none-proof";
    case MateResult::Status::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

RunReport designs_mate(const GlobalOptions& g, const std::string& in_path, std::uint64_t budget) {
  RunReport r = make_report("designs mate", g);
  r.parameters["in"] = in_path;
  r.parameters["budget"] = budget;
  const LatinSquare l = latin_square_from_json(read_json_file(in_path));
  const MateResult m = orthogonal_mate(l, budget);
  r.results["status"] = status_name(m.status);
  r.results["transversals"] = m.transversal_count;
  r.results["nodes"] = m.nodes;
  bool pass = m.status != MateResult::Status::BudgetExhausted;
  if (m.mate) {
    const bool ok = is_latin(*m.mate) && are_orthogonal(l, *m.mate);
    r.results["mate"] = latin_square_to_json(*m.mate);
    r.results["mate_verified"] = ok;
    pass = pass && ok;
  }
  r.pass = pass;
  return r;
}

RunReport designs_survey(const GlobalOptions& g, std::size_t n, std::uint64_t budget) {
  RunReport r = make_report("designs survey6", g);
  r.parameters["n"] = n;
  r.parameters["budget"] = budget;
  const SurveyCertificate cert = mate_survey(n, g.threads, budget);
  Json per_square = Json::array();
  for (const auto& e : cert.entries) {
    per_square.push_back(Json{{"index", e.index},
                              {"transversals", e.transversal_count},
                              {"nodes", e.nodes},
                              {"status", status_name(e.status)}});
  }
  r.results["certificate"] = "reduced squares: " + std::to_string(cert.reduced_squares) +
                             ", mates found: " + std::to_string(cert.mates_found);
  r.results["reduced_squares"] = cert.reduced_squares;
  r.results["mates_found"] = cert.mates_found;
  r.results["budget_exhausted"] = cert.budget_exhausted;
  r.results["total_nodes"] = cert.total_nodes;
  r.results["per_square"] = std::move(per_square);
  r.pass = cert.reduced_squares == 9408 && cert.mates_found == 0 && cert.budget_exhausted == 0;
  return r;
}

RunReport designs_bruck_ryser(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("designs bruck-ryser", g);
  r.parameters["n"] = n;
  r.results["n_mod_4"] = n % 4;
  r.results["sum_of_two_squares"] = is_sum_of_two_squares(n);
  r.results["excluded"] = bruck_ryser_excludes(n);
  r.results["prime_power"] = as_prime_power(n).has_value();
  r.pass = true;
  return r;
}

RunReport john_polytope(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("john polytope", g);
  r.parameters["n"] = n;
  const TouchingSet ts = polytope_touching_set(build_abstract(n));
  const JohnReport jr = verify_john(ts, g.tolerance());
  r.results = john_report_to_json(jr);
  r.results["points"] = ts.points.size();
  r.results["radius"] = ts.points.front().norm();
  r.results["expected_radius"] = geometry_report(n).r_in;
  r.pass = jr.pass;
  return r;
}

RunReport john_density(const GlobalOptions& g, std::size_t n) {
  RunReport r = make_report("john density", g);
  r.parameters["n"] = n;
  const TouchingSet ts = density_touching_set(build_complete(n), make_traceless_basis(n));
  const JohnReport jr = verify_john(ts, g.tolerance());
  r.results = john_report_to_json(jr);
  r.results["points"] = ts.points.size();
  r.results["radius"] = ts.points.front().norm();
  r.results["expected_radius"] = geometry_report(n).r_body;
  r.pass = jr.pass;
  return r;
}

RunReport john_sic(const GlobalOptions& g, const std::string& in_path) {
  RunReport r = make_report("john sic", g);
  r.parameters["in"] = in_path;
  const auto vectors = state_vectors_from_json(read_json_file(in_path));
  const SicReport sr = verify_sic(vectors, g.tolerance());
  r.results["max_overlap_deviation"] = sr.max_overlap_deviation;
  r.results["worst_pair"] = Json::array({sr.witness_i, sr.witness_j});
  r.results["povm"] = sr.povm;
  r.results["povm_residual"] = sr.povm_residual;
  r.results["john"] = sr.john ? john_report_to_json(*sr.john) : Json(nullptr);
  r.pass = sr.pass;
  return r;
}

void emit(const RunReport& report, const GlobalOptions& g, std::ostream& out) {
  if (g.output == "text") {
    out << "command: " << report.command << '\n';
    out << "pass: " << (report.pass ? "true" : "false") << '\n';
    if (report.seed) out << "seed: " << *report.seed << '\n';
    for (const auto& [key, value] : report.results.items()) out << key << ": " << value.dump() << '\n';
    return;
  }
  out << report.to_json().dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complementarity polytope, MUB, and affine-plane verification tool", "cpolytope"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", g.tol, "Tolerance for numeric checks");
  app.add_option("--seed", g.seed, "Seed for Monte-Carlo sampling");
  app.add_option("--samples", g.samples, "Monte-Carlo sample count");
  app.add_option("--threads", g.threads, "Worker cap (0 = all cores)");

  std::size_t n = 0;
  std::size_t q = 0;
  std::string in_path, out_path, mols_path, mode = "mc";
  std::uint64_t budget = kDefaultMateBudget;
  std::function<RunReport()> action;

  auto* mub = app.add_subcommand("mub", "Mutually unbiased bases")->require_subcommand(1);
  mub->add_subcommand("build", "Build a complete MUB set")
      ->callback([&] { action = [&] { return mub_build(g, n, out_path); }; })
      ->add_option("--n", n)->required();
  mub->get_subcommand("build")->add_option("--out", out_path);
  mub->add_subcommand("verify", "Verify a MUB set file")
      ->callback([&] { action = [&] { return mub_verify(g, in_path); }; })
      ->add_option("--in", in_path)->required();
  mub->add_subcommand("bound", "Lower bound on the number of MUBs")
      ->callback([&] { action = [&] { return mub_bound(g, n); }; })
      ->add_option("--n", n)->required();

  auto* poly = app.add_subcommand("polytope", "Complementarity polytope geometry")->require_subcommand(1);
  poly->add_subcommand("report", "Closed-form volumes, insphere, area")
      ->callback([&] { action = [&] { return polytope_report(g, n); }; })
      ->add_option("--n", n)->required();
  auto* volume = poly->add_subcommand("volume", "Volume oracle");
  volume->callback([&] { action = [&] { return polytope_volume(g, n, mode); }; });
  volume->add_option("--n", n)->required();
  volume->add_option("--mode", mode)->check(CLI::IsMember({"cone", "mc"}));
  poly->add_subcommand("check", "Gram structure and embedding of the MUB realization")
      ->callback([&] { action = [&] { return polytope_check(g, n); }; })
      ->add_option("--n", n)->required();

  auto* inscribe = app.add_subcommand("inscribe", "Inscribed A-simplex from MOLS")->require_subcommand(0, 1);
  inscribe->add_option("--n", n);
  inscribe->add_option("--mols", mols_path);
  inscribe->callback([&] {
    if (!action) {
      if (n == 0) throw CLI::RequiredError("--n");
      action = [&] { return inscribe_build(g, n, mols_path); };
    }
  });
  auto* search = inscribe->add_subcommand("search", "Exhaustive inscription search (n <= 3)");
  search->callback([&] { action = [&] { return inscribe_search(g, n); }; });
  search->add_option("--n", n)->required();

  auto* designs = app.add_subcommand("designs", "Latin squares and affine planes")->require_subcommand(1);
  designs->add_subcommand("mols", "MOLS over GF(q)")
      ->callback([&] { action = [&] { return designs_mols(g, q); }; })
      ->add_option("--q", q)->required();
  auto* mate = designs->add_subcommand("mate", "Orthogonal mate search");
  mate->callback([&] { action = [&] { return designs_mate(g, in_path, budget); }; });
  mate->add_option("--in", in_path)->required();
  mate->add_option("--budget", budget);
  auto* survey = designs->add_subcommand("survey6", "Mate search over all reduced order-6 squares");
  survey->callback([&] { action = [&] { return designs_survey(g, 6, budget); }; });
  survey->add_option("--budget", budget);
  designs->add_subcommand("bruck-ryser", "Bruck-Ryser exclusion predicate")
      ->callback([&] { action = [&] { return designs_bruck_ryser(g, n); }; })
      ->add_option("--n", n)->required();

  auto* john = app.add_subcommand("john", "John's maximal-ellipsoid conditions")->require_subcommand(1);
  john->add_subcommand("polytope", "Polytope insphere")
      ->callback([&] { action = [&] { return john_polytope(g, n); }; })
      ->add_option("--n", n)->required();
  john->add_subcommand("density", "Density-body insphere from constructed MUBs")
      ->callback([&] { action = [&] { return john_density(g, n); }; })
      ->add_option("--n", n)->required();
  john->add_subcommand("sic", "SIC family verification")
      ->callback([&] { action = [&] { return john_sic(g, in_path); }; })
      ->add_option("--in", in_path)->required();

  std::vector<const char*> argv{"cpolytope"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }
  if (!action) {
    err << app.help();
    return kUsageError;
  }

  try {
    const RunReport report = action();
    emit(report, g, out);
    return report.pass ? kPass : kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace cpoly::cli
