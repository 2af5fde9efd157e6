#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fermigauss/dynamics.hpp"
#include "fermigauss/entanglement.hpp"
#include "fermigauss/fock.hpp"
#include "fermigauss/jordan_wigner.hpp"
#include "fermigauss/json_io.hpp"
#include "fermigauss/selfdual.hpp"
#include "fermigauss/wick.hpp"

namespace {

using namespace fermigauss;

double default_eps() {
  if (const char* env = std::getenv("FERMIGAUSS_EPS")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return kDefaultEps;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const json& j) {
  const std::string text = j.dump() + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write output file: " + path);
  out << text;
}

CovarianceMatrix load_covariance(const std::string& path) {
  return covariance_from_json(parse_json(read_input(path)));
}

// Builds the dense oracle state for a validated covariance: the projected
// vacuum when pure, the Wick-reconstructed density otherwise.
Matrix oracle_density(const CovarianceMatrix& s, double eps) {
  if (is_basis_projection(s, eps).is_projection) {
    const Vector omega = vacuum_of_projection(s, eps);
    return omega * omega.adjoint();
  }
  return density_from_covariance(s);
}

json block_report_json(const BlockMaximalityReport& report) {
  json j;
  j["maximal"] = report.maximal;
  j["degenerate"] = report.degenerate;
  json blocks = json::array();
  for (const BlockMaximality& b : report.blocks) {
    json entry;
    entry["alice_parity"] = b.alice_parity;
    entry["bob_parity"] = b.bob_parity;
    entry["probability"] = b.probability;
    entry["purity_deviation"] = b.purity_deviation;
    entry["reduced_deviation"] = b.reduced_deviation;
    entry["entropy_bits"] = b.entropy_bits;
    blocks.push_back(std::move(entry));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic Gaussian covariance toolkit"};
  app.require_subcommand(1);

  double eps = default_eps();
  app.add_option("--eps", eps, "absolute tolerance for all checks (env FERMIGAUSS_EPS)")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check covariance invariants");
  std::string validate_file;
  validate_cmd->add_option("file", validate_file, "covariance JSON ('-' = stdin)")->required();
  validate_cmd->callback([&] {
    const CovarianceMatrix s = load_covariance(validate_file);
    const ValidationReport report = validate_covariance(s, eps);
    write_output("", validation_report_to_json(report));
    exit_code = report.valid ? 0 : 1;
  });

  auto* certify_cmd = app.add_subcommand("certify", "certify maximal entanglement");
  std::string certify_file;
  certify_cmd->add_option("file", certify_file, "covariance JSON ('-' = stdin)")->required();
  certify_cmd->callback([&] {
    const CovarianceMatrix s = load_covariance(certify_file);
    const Certificate cert = certify(s, eps);
    write_output("", certificate_to_json(cert));
    exit_code = cert.maximally_entangled ? 0 : 1;
  });

  auto* construct_cmd = app.add_subcommand("construct", "build a covariance matrix");
  int standard_n = 0, jw_n = 0, product_n = 0;
  std::string unitary_file, construct_out;
  auto* opt_standard =
      construct_cmd->add_option("--standard", standard_n, "standard maximally entangled state");
  auto* opt_jw = construct_cmd->add_option("--jw", jw_n, "Jordan-Wigner pair-chain state");
  auto* opt_product = construct_cmd->add_option("--product", product_n, "occupied product state");
  auto* opt_unitary = construct_cmd->add_option("--from-unitary", unitary_file,
                                                "build from an anticommuting unitary (JSON)");
  construct_cmd->add_option("-o,--output", construct_out, "output file ('-' = stdout)");
  opt_standard->excludes(opt_jw)->excludes(opt_product)->excludes(opt_unitary);
  opt_jw->excludes(opt_product)->excludes(opt_unitary);
  opt_product->excludes(opt_unitary);
  construct_cmd->callback([&] {
    CovarianceMatrix s(SystemShape(1, 1), Matrix::Zero(4, 4));
    if (*opt_standard) {
      s = standard_state(standard_n);
    } else if (*opt_jw) {
      s = pair_chain_covariance(jw_n);
    } else if (*opt_product) {
      s = product_state(SystemShape(product_n, product_n));
    } else if (*opt_unitary) {
      const json j = parse_json(read_input(unitary_file));
      const Matrix u = matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
      s = from_unitary(u, eps);
    } else {
      throw CLI::ValidationError("construct",
                                 "one of --standard/--jw/--product/--from-unitary is required");
    }
    write_output(construct_out, covariance_to_json(s));
  });

  auto* evolve_cmd = app.add_subcommand("evolve", "apply the entangling evolution");
  double evolve_t = 0.0;
  int evolve_modes = 2;
  std::string evolve_in, evolve_out;
  evolve_cmd->add_option("--time", evolve_t, "interaction time t")->required();
  evolve_cmd->add_option("--in", evolve_in, "initial covariance JSON ('-' = stdin)");
  evolve_cmd->add_option("--modes", evolve_modes,
                         "modes per party for the default product initial state");
  evolve_cmd->add_option("-o,--output", evolve_out, "output file ('-' = stdout)");
  evolve_cmd->callback([&] {
    const CovarianceMatrix initial = evolve_in.empty()
                                         ? product_state(SystemShape(evolve_modes, evolve_modes))
                                         : load_covariance(evolve_in);
    write_output(evolve_out, covariance_to_json(evolve(initial, evolve_t, eps)));
  });

  auto* eof_cmd = app.add_subcommand("eof", "entanglement of formation via the dense oracle");
  std::string eof_file;
  bool eof_detail = false;
  eof_cmd->add_option("file", eof_file, "covariance JSON ('-' = stdin)")->required();
  eof_cmd->add_flag("--oracle", eof_detail, "include the parity-block oracle report");
  eof_cmd->callback([&] {
    const CovarianceMatrix s = load_covariance(eof_file);
    const ValidationReport report = validate_covariance(s, eps);
    if (!report.valid) {
      write_output("", validation_report_to_json(report));
      exit_code = 1;
      return;
    }
    const Matrix rho = oracle_density(s, eps);
    json out;
    out["eof_bits"] = entanglement_of_formation(s.shape, rho, eps);
    if (eof_detail) out["blocks"] = block_report_json(check_block_maximality(s.shape, rho, eps));
    write_output("", out);
  });

  auto* wick_cmd = app.add_subcommand("wick", "quasifree expectation of a field monomial");
  std::string wick_state, wick_fields;
  wick_cmd->add_option("state", wick_state, "covariance JSON ('-' = stdin)")->required();
  wick_cmd->add_option("fields", wick_fields, "JSON array of field vectors")->required();
  wick_cmd->callback([&] {
    const CovarianceMatrix s = load_covariance(wick_state);
    const std::vector<Vector> fields =
        fields_from_json(parse_json(read_input(wick_fields)), s.shape);
    const Complex value = wick_expectation(s, fields);
    json out;
    out["re"] = value.real();
    out["im"] = value.imag();
    write_output("", out);
  });

  auto* oracle_cmd = app.add_subcommand("oracle-check", "dense-oracle consistency report");
  std::string oracle_file;
  oracle_cmd->add_option("file", oracle_file, "covariance JSON ('-' = stdin)")->required();
  oracle_cmd->callback([&] {
    const CovarianceMatrix s = load_covariance(oracle_file);
    const ValidationReport report = validate_covariance(s, eps);
    json out;
    out["validation"] = validation_report_to_json(report);
    if (!report.valid) {
      write_output("", out);
      exit_code = 1;
      return;
    }

    const ProjectionCheck proj = is_basis_projection(s, eps);
    out["pure"] = proj.is_projection;
    out["purity_deviation"] = proj.deviation;

    const Matrix rho = oracle_density(s, eps);
    const CovarianceMatrix back = covariance_from_density(s.shape, rho);
    const double roundtrip = max_abs(Matrix(back.entries - s.entries));
    out["roundtrip_deviation"] = roundtrip;
    bool ok = roundtrip <= eps;

    if (s.shape.n_alice == s.shape.n_bob) {
      const ParityBlockDecomposition blocks = parity_blocks(s.shape, rho);
      json parity;
      parity["p_even_even"] = blocks.probability(+1, +1);
      parity["p_even_odd"] = blocks.probability(+1, -1);
      parity["p_odd_even"] = blocks.probability(-1, +1);
      parity["p_odd_odd"] = blocks.probability(-1, -1);
      const double dichotomy = blocks.support_dichotomy_deviation();
      parity["dichotomy_deviation"] = dichotomy;
      out["parity"] = std::move(parity);
      if (proj.is_projection) ok = ok && dichotomy <= eps;

      out["block_maximality"] = block_report_json(check_block_maximality(s.shape, rho, eps));
    }
    write_output("", out);
    exit_code = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
