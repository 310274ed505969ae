#pragma once

// Command-line front end. Plain text by default, --json for machine output,
// --dot for graph export. Exit codes: 0 success / all checks passed,
// 1 verification failure, 2 usage error.

#include <cstdlib>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "ortho/parse.hpp"
#include "ortho/report.hpp"
#include "ortho/verify.hpp"
#include "ortho/witness.hpp"

namespace ortho {

namespace cli {

inline Limits limits_from_env() {
  Limits lim;
  const char* profile = std::getenv("ORTHOGRAPH_LIMITS");
  if (profile == nullptr || std::string(profile) == "default") return lim;
  const std::string p = profile;
  if (p == "small") {
    lim.ring_order_cap = 512;
    lim.table_cap = 512;
    lim.candidate_cap = 200'000;
    lim.export_cap = 500;
    lim.adjacency_cache_cap = 5'000;
  } else if (p == "large") {
    lim.ring_order_cap = 100'000;
    lim.candidate_cap = 50'000'000;
    lim.export_cap = 20'000;
    lim.adjacency_cache_cap = 100'000;
  } else {
    throw Error("unknown ORTHOGRAPH_LIMITS profile '" + p + "' (default|small|large)");
  }
  return lim;
}

inline std::string format_metric(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("infinite");
}

inline void print_analyze_text(const GraphReport& rep, std::ostream& out) {
  if (rep.vertex_count == 0) {
    out << "empty graph (no vertices)\n";
    return;
  }
  out << (rep.connected ? "connected" : "disconnected") << ", diameter="
      << format_metric(rep.diameter) << ", radius=" << format_metric(rep.radius) << "\n";
  out << "vertices: " << rep.vertex_count << "\n";
  if (rep.diameter_witness)
    out << "diameter witness: " << rep.diameter_witness->first << " | "
        << rep.diameter_witness->second << "\n";
  if (rep.center_witness) out << "center: " << *rep.center_witness << "\n";
  out << "eccentricity histogram:";
  for (const auto& [ecc, count] : rep.eccentricity_histogram)
    out << " " << ecc << ":" << count;
  out << "\n";
  out << "components: " << rep.component_count;
  if (!rep.connected) {
    out << " (diameters:";
    for (const std::size_t d : rep.component_diameters) out << " " << d;
    out << ")";
  }
  out << "\n";
}

} // namespace cli

/// Entry point shared by the binary and the tests.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonality graphs of matrix rings over finite commutative rings"};
  app.require_subcommand(1);

  std::string ring_str, matrix_str, matrix_b_str, c_str, suite = "all";
  std::size_t n = 2;
  bool as_json = false, as_dot = false;
  std::uint64_t max_vertices = 0;
  unsigned threads = 0;

  auto add_ring = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ring_str, "ring spec, e.g. Z6, Z2[x]/(x^2), Z2 x Z2")->required();
  };
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-vertices", max_vertices, "candidate matrix enumeration cap");
    cmd->add_option("--threads", threads, "worker threads for graph analysis");
  };

  CLI::App* info = app.add_subcommand("info", "ring facts: order, zero-divisors, units");
  add_ring(info);
  info->add_flag("--json", as_json);

  CLI::App* predict_cmd = app.add_subcommand("predict", "predicted diameter/radius facts");
  add_ring(predict_cmd);
  predict_cmd->add_option("--n", n, "matrix size (default 2)");
  predict_cmd->add_flag("--json", as_json);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "measure the graph by exhaustive BFS");
  add_ring(analyze_cmd);
  analyze_cmd->add_option("--n", n, "matrix size (default 2)");
  analyze_cmd->add_flag("--json", as_json);
  add_caps(analyze_cmd);

  CLI::App* witness_cmd =
      app.add_subcommand("witness", "annihilating complement and orthogonal witness for a matrix");
  add_ring(witness_cmd);
  witness_cmd->add_option("--n", n, "matrix size (default 2)");
  witness_cmd->add_option("--matrix", matrix_str, "matrix literal, e.g. \"2,0;0,1\"")->required();
  witness_cmd->add_option("--c", c_str, "nonzero element with c*det(A) = 0")->required();
  witness_cmd->add_flag("--json", as_json);

  CLI::App* path_cmd =
      app.add_subcommand("path", "explicit path to a scalar vertex, or between two vertices");
  add_ring(path_cmd);
  path_cmd->add_option("--n", n, "matrix size (default 2)");
  path_cmd->add_option("--matrix", matrix_str, "start vertex")->required();
  path_cmd->add_option("--matrix-b", matrix_b_str, "end vertex (omit for a scalar-vertex path)");
  path_cmd->add_flag("--json", as_json);

  CLI::App* distance_cmd = app.add_subcommand("distance", "exact BFS distance between vertices");
  add_ring(distance_cmd);
  distance_cmd->add_option("--n", n, "matrix size (default 2)");
  distance_cmd->add_option("--matrix", matrix_str, "first vertex")->required();
  distance_cmd->add_option("--matrix-b", matrix_b_str, "second vertex")->required();
  distance_cmd->add_flag("--json", as_json);
  add_caps(distance_cmd);

  CLI::App* export_cmd = app.add_subcommand("export", "graph as DOT (default) or adjacency JSON");
  add_ring(export_cmd);
  export_cmd->add_option("--n", n, "matrix size (default 2)");
  export_cmd->add_flag("--json", as_json);
  export_cmd->add_flag("--dot", as_dot);
  add_caps(export_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the theorem-checking suites");
  add_ring(verify_cmd);
  verify_cmd->add_option("--n", n, "matrix size (default 2)");
  verify_cmd->add_option(
      "--suite", suite, "equivalence|complement|scalar|diameter|radius|bound|all (default all)");
  add_caps(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Limits limits = cli::limits_from_env();
    if (max_vertices != 0) limits.candidate_cap = max_vertices;
    if (threads != 0) limits.threads = threads;

    const Ring R(parse_ring_spec(ring_str), limits);

    if (app.got_subcommand(info)) {
      const std::vector<Elem> zd = zero_divisors(R);
      if (as_json) {
        nlohmann::ordered_json doc;
        doc["ring"] = R.str();
        doc["order"] = R.order();
        doc["one"] = R.format(R.one());
        auto z = nlohmann::ordered_json::array();
        for (const Elem e : zd) z.push_back(R.format(e));
        doc["zero_divisors"] = std::move(z);
        doc["unit_count"] = R.order() - zd.size();
        out << doc.dump(2) << "\n";
      } else {
        out << "ring: " << R.str() << "\n";
        out << "order: " << R.order() << "\n";
        out << "one: " << R.format(R.one()) << "\n";
        out << "zero_divisors (" << zd.size() << "):";
        for (const Elem e : zd) out << " " << R.format(e);
        out << "\n";
        out << "units: " << R.order() - zd.size() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(predict_cmd)) {
      const PredictionReport rep = predict(R, n);
      if (as_json) {
        out << to_json(rep, R).dump(2) << "\n";
      } else {
        out << "ring: " << rep.ring << ", n: " << rep.n << "\n";
        out << "crit: " << (rep.crit.holds ? "true" : "false");
        if (!rep.crit.holds) out << " (failing a0 = " << R.format(*rep.crit.failing) << ")";
        out << "\n";
        out << "cond: " << (rep.cond.holds ? "true" : "false");
        if (rep.cond.holds) out << " (witness c = " << R.format(*rep.cond.witness) << ")";
        out << "\n";
        out << "bad_annihilator: "
            << (rep.bad_annihilator ? R.format(*rep.bad_annihilator) : std::string("none")) << "\n";
        out << "predicted_diameter: " << rep.predicted_diameter << "\n";
        out << "predicted_radius: {";
        for (std::size_t i = 0; i < rep.predicted_radius.size(); ++i)
          out << (i ? "," : "") << rep.predicted_radius[i];
        out << "}\n";
      }
      return 0;
    }

    if (app.got_subcommand(analyze_cmd)) {
      const GraphReport rep = Graph(R, n, limits).analyze();
      if (as_json)
        out << to_json(rep).dump(2) << "\n";
      else
        cli::print_analyze_text(rep, out);
      return 0;
    }

    if (app.got_subcommand(witness_cmd)) {
      const Matrix A = parse_matrix(matrix_str, R, n, n);
      const Elem c = parse_element(c_str, R);
      if (c.index == 0) throw Error("witness: --c must be nonzero");
      if (R.mul(c, determinant(A)).index != 0)
        throw Error("witness: c*det(A) != 0 (c must annihilate the determinant)");
      const Ideal I = annihilator(R, c);
      const Matrix B = annihilating_complement(A, I);
      const Matrix C = scalar_mul(c, B);
      const bool b_outside = !in_matrix_ideal(B, I);
      const bool ab_in = in_matrix_ideal(A * B, I);
      const bool ba_in = in_matrix_ideal(B * A, I);
      const bool c_nonzero = !C.is_zero();
      const bool c_ortho = orthogonal(A, C);
      const bool all_ok = b_outside && ab_in && ba_in && c_nonzero && c_ortho;
      if (as_json) {
        nlohmann::ordered_json doc;
        doc["ring"] = R.str();
        doc["n"] = n;
        doc["matrix"] = format_matrix(A);
        doc["c"] = R.format(c);
        auto ideal = nlohmann::ordered_json::array();
        for (const Elem e : I.members()) ideal.push_back(R.format(e));
        doc["ideal"] = std::move(ideal);
        doc["complement"] = format_matrix(B);
        doc["witness"] = format_matrix(C);
        doc["checks"] = {{"complement_outside_ideal", b_outside},
                         {"AB_in_ideal", ab_in},
                         {"BA_in_ideal", ba_in},
                         {"witness_nonzero", c_nonzero},
                         {"witness_orthogonal", c_ortho}};
        out << doc.dump(2) << "\n";
      } else {
        out << "A = " << format_matrix(A) << "\n";
        out << "c = " << R.format(c) << ", I = Ann(c) = {";
        for (std::size_t i = 0; i < I.members().size(); ++i)
          out << (i ? "," : "") << R.format(I.members()[i]);
        out << "}\n";
        out << "B = " << format_matrix(B) << "\n";
        out << "C = c*B = " << format_matrix(C) << "\n";
        out << "check B not in M_n(I): " << (b_outside ? "ok" : "FAILED") << "\n";
        out << "check A*B in M_n(I): " << (ab_in ? "ok" : "FAILED") << "\n";
        out << "check B*A in M_n(I): " << (ba_in ? "ok" : "FAILED") << "\n";
        out << "check C != 0: " << (c_nonzero ? "ok" : "FAILED") << "\n";
        out << "check A*C = C*A = 0: " << (c_ortho ? "ok" : "FAILED") << "\n";
      }
      return all_ok ? 0 : 1;
    }

    if (app.got_subcommand(path_cmd)) {
      const Matrix A = parse_matrix(matrix_str, R, n, n);
      OrthoPath path = matrix_b_str.empty()
                           ? path_to_scalar(A)
                           : connect(A, parse_matrix(matrix_b_str, R, n, n));
      try {
        path.validate();
      } catch (const Error& e) {
        err << "error: produced path failed validation: " << e.what() << "\n";
        return 1;
      }
      if (as_json) {
        nlohmann::ordered_json doc;
        doc["ring"] = R.str();
        doc["n"] = n;
        doc["length"] = path.length();
        auto verts = nlohmann::ordered_json::array();
        for (const Matrix& V : path.vertices) verts.push_back(format_matrix(V));
        doc["vertices"] = std::move(verts);
        out << doc.dump(2) << "\n";
      } else {
        out << "path (length " << path.length() << "):";
        for (std::size_t i = 0; i < path.vertices.size(); ++i)
          out << (i ? " -> " : " ") << format_matrix(path.vertices[i]);
        out << "\nvalid: ok\n";
      }
      return 0;
    }

    if (app.got_subcommand(distance_cmd)) {
      const Graph graph(R, n, limits);
      const auto d = graph.distance(parse_matrix(matrix_str, R, n, n),
                                    parse_matrix(matrix_b_str, R, n, n));
      if (as_json) {
        nlohmann::ordered_json doc;
        doc["distance"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json("infinite");
        out << doc.dump(2) << "\n";
      } else {
        out << "distance = " << cli::format_metric(d) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(export_cmd)) {
      const Graph graph(R, n, limits);
      out << (as_json ? graph.export_json() : graph.export_dot());
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      const std::vector<CheckResult> results = run_suite(R, n, suite, limits);
      std::size_t passed = 0;
      for (const CheckResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
        if (r.pass) ++passed;
      }
      out << passed << "/" << results.size() << " checks passed\n";
      return passed == results.size() ? 0 : 1;
    }

    err << "error: no command\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace ortho
