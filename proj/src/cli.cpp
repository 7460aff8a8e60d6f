#include "gausscoh/cli.hpp"

#include "gausscoh/coherence.hpp"
#include "gausscoh/fock.hpp"
#include "gausscoh/io.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gausscoh::cli {

namespace {

using io::json;

constexpr int kSchemaVersion = 1;

void print_json(std::ostream& out, json j) {
  j["schema_version"] = kSchemaVersion;
  out << j.dump(2) << "\n";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void print_state_text(std::ostream& out, const GaussianState& s) {
  out << "modes: " << s.n << "\n";
  out << "V:\n" << s.V << "\n";
  out << "d0: " << s.d0.transpose() << "\n";
}

void print_channel_text(std::ostream& out, const GaussianChannel& c) {
  out << "modes: " << c.n << "\n";
  out << "T:\n" << c.T << "\n";
  out << "N:\n" << c.N << "\n";
  out << "d: " << c.d.transpose() << "\n";
}

int cmd_validate(const CommandRequest& req, std::ostream& out) {
  if (!req.state_path.empty()) {
    const GaussianState s = io::parse_state(io::load_json_file(req.state_path));
    const StateValidity rep = validate_state(s, req.tol);
    if (req.format == "json") {
      json j{{"object", "state"},
             {"valid", rep.valid()},
             {"symmetric", rep.symmetric},
             {"symmetry_error", rep.symmetry_error},
             {"min_eigenvalue", rep.uncertainty.min_eigenvalue},
             {"symplectic_eigenvalues", rep.nu}};
      print_json(out, j);
    } else {
      out << "state: " << (rep.valid() ? "valid" : "invalid") << "\n";
      out << "  symmetric:              " << yesno(rep.symmetric) << "\n";
      out << "  uncertainty min eigval: " << rep.uncertainty.min_eigenvalue << "\n";
      out << "  symplectic eigenvalues:";
      for (double nu : rep.nu) out << " " << nu;
      out << "\n";
      if (!rep.pairing_ok) out << "  note: " << rep.detail << "\n";
    }
    return rep.valid() ? 0 : 1;
  }
  if (!req.channel_path.empty()) {
    const GaussianChannel c = io::parse_channel(io::load_json_file(req.channel_path));
    const ChannelValidity rep = validate_channel(c, req.tol);
    if (req.format == "json") {
      json j{{"object", "channel"},
             {"valid", rep.valid()},
             {"N_symmetric", rep.n_symmetric},
             {"cp_min_eigenvalue", rep.cp.min_eigenvalue}};
      print_json(out, j);
    } else {
      out << "channel: " << (rep.valid() ? "valid" : "invalid") << "\n";
      out << "  N symmetric:                " << yesno(rep.n_symmetric) << "\n";
      out << "  positivity min eigenvalue:  " << rep.cp.min_eigenvalue << "\n";
    }
    return rep.valid() ? 0 : 1;
  }
  const GaussianSuperchannel sc =
      io::parse_superchannel(io::load_json_file(req.superchannel_path));
  const SuperchannelValidity rep = validate_superchannel(sc, req.tol);
  if (req.format == "json") {
    json j{{"object", "superchannel"},
           {"valid", rep.valid()},
           {"O_orthogonal", rep.o_orthogonal},
           {"O_orthogonality_error", rep.o_orthogonality_error},
           {"Y_symmetric", rep.y_symmetric},
           {"pre_min_eigenvalue", rep.pre_cp.min_eigenvalue},
           {"post_min_eigenvalue", rep.post_cp.min_eigenvalue}};
    print_json(out, j);
  } else {
    out << "superchannel: " << (rep.valid() ? "valid" : "invalid") << "\n";
    out << "  O orthogonal:              " << yesno(rep.o_orthogonal) << " (err "
        << rep.o_orthogonality_error << ")\n";
    out << "  Y symmetric:               " << yesno(rep.y_symmetric) << "\n";
    out << "  pre  positivity min eig:   " << rep.pre_cp.min_eigenvalue << "\n";
    out << "  post positivity min eig:   " << rep.post_cp.min_eigenvalue << "\n";
  }
  return rep.valid() ? 0 : 1;
}

json tn_structure_json(const TnStructure& s) {
  json blocks = json::array();
  for (int j = 0; j < s.n; ++j) {
    blocks.push_back(json{{"t", s.t[j]},
                          {"row", s.row[j] + 1},
                          {"unit", {{s.block[j](0, 0), s.block[j](0, 1)},
                                    {s.block[j](1, 0), s.block[j](1, 1)}}}});
  }
  return blocks;
}

void print_tn_structure_text(std::ostream& out, const TnStructure& s) {
  for (int j = 0; j < s.n; ++j) {
    out << "  column block " << j + 1 << ": t = " << s.t[j] << ", row block "
        << s.row[j] + 1 << ", unit = [[" << s.block[j](0, 0) << ", " << s.block[j](0, 1)
        << "], [" << s.block[j](1, 0) << ", " << s.block[j](1, 1) << "]]\n";
  }
}

int cmd_classify(const CommandRequest& req, std::ostream& out) {
  if (!req.channel_path.empty()) {
    const GaussianChannel c = io::parse_channel(io::load_json_file(req.channel_path));
    if (!validate_channel(c).valid()) {
      out << "channel: invalid (fails complete positivity)\n";
      return 1;
    }
    const IncoherentChannelCheck chk = is_incoherent_channel(c);
    if (req.format == "json") {
      json j{{"object", "channel"}, {"incoherent", chk.incoherent}};
      if (chk.incoherent) {
        j["structure"] = tn_structure_json(*chk.structure);
        j["omega"] = chk.omega;
      } else {
        j["failure"] = chk.failure;
      }
      print_json(out, j);
    } else {
      out << "channel: " << (chk.incoherent ? "incoherent" : "coherent") << "\n";
      if (chk.incoherent) {
        print_tn_structure_text(out, *chk.structure);
        out << "  noise scalars:";
        for (double w : chk.omega) out << " " << w;
        out << "\n";
      } else {
        out << "  " << chk.failure << "\n";
      }
    }
    return 0;
  }
  const GaussianSuperchannel sc =
      io::parse_superchannel(io::load_json_file(req.superchannel_path));
  if (!validate_superchannel(sc).valid()) {
    out << "superchannel: invalid\n";
    return 1;
  }
  const IncoherentSuperchannelCheck chk = is_incoherent_superchannel(sc);
  if (req.format == "json") {
    json j{{"object", "superchannel"}, {"incoherent", chk.incoherent}};
    if (chk.incoherent) {
      j["A_structure"] = tn_structure_json(*chk.a_structure);
      j["O_structure"] = tn_structure_json(*chk.o_structure);
      j["eta"] = chk.eta;
    } else {
      j["failure"] = chk.failure;
    }
    print_json(out, j);
  } else {
    out << "superchannel: " << (chk.incoherent ? "incoherent" : "coherent") << "\n";
    if (!chk.incoherent) out << "  " << chk.failure << "\n";
  }
  return 0;
}

int cmd_apply(const CommandRequest& req, std::ostream& out) {
  const GaussianChannel c = io::parse_channel(io::load_json_file(req.channel_path));
  const GaussianState s = io::parse_state(io::load_json_file(req.state_path));
  if (!validate_channel(c).valid()) {
    out << "channel: invalid (fails complete positivity)\n";
    return 1;
  }
  if (!validate_state(s).valid()) {
    out << "state: invalid (fails the uncertainty relation)\n";
    return 1;
  }
  const GaussianState result = apply_channel(c, s);
  if (req.format == "json")
    print_json(out, io::emit_state(result));
  else
    print_state_text(out, result);
  return 0;
}

json coherence_record(const CoherenceResult& r) { return io::emit_coherence_result(r); }

int cmd_coherence(const CommandRequest& req, std::ostream& out) {
  if (!req.state_path.empty()) {
    const GaussianState s = io::parse_state(io::load_json_file(req.state_path));
    if (!validate_state(s).valid()) {
      out << "state: invalid (fails the uncertainty relation)\n";
      return 1;
    }
    CoherenceResult r;
    r.value = cr_state(s);
    r.status = SearchStatus::converged;
    r.argmax_nu = Vec(0);
    r.evaluations = 0;
    if (req.format == "json")
      print_json(out, coherence_record(r));
    else
      out << "coherence: " << *r.value << " bits\n";
    return 0;
  }

  const GaussianChannel c = io::parse_channel(io::load_json_file(req.channel_path));
  if (!validate_channel(c).valid()) {
    out << "channel: invalid (fails complete positivity)\n";
    return 1;
  }
  OptimizerOptions opts;
  opts.nu_max = req.nu_max;
  const CoherenceResult r = cr_channel(c, opts);
  if (req.format == "json") {
    print_json(out, coherence_record(r));
  } else {
    out << "coherence: ";
    if (r.value)
      out << *r.value << " bits";
    else
      out << "n/a";
    out << "\n";
    out << "  status:      " << to_string(r.status) << "\n";
    out << "  argmax nu:  ";
    for (int j = 0; j < r.argmax_nu.size(); ++j) out << " " << r.argmax_nu(j);
    out << "\n";
    out << "  evaluations: " << r.evaluations << "\n";
  }
  return (req.strict && r.status == SearchStatus::divergent) ? 1 : 0;
}

int cmd_choi(const CommandRequest& req, std::ostream& out) {
  const GaussianChannel c = io::parse_channel(io::load_json_file(req.channel_path));
  if (!validate_channel(c).valid()) {
    out << "channel: invalid (fails complete positivity)\n";
    return 1;
  }
  const GaussianState s = choi_state(c, ChoiParams::from_r(req.choi_r));
  if (req.format == "json")
    print_json(out, io::emit_state(s));
  else
    print_state_text(out, s);
  return 0;
}

int cmd_superchannel_apply(const CommandRequest& req, std::ostream& out) {
  const GaussianSuperchannel sc =
      io::parse_superchannel(io::load_json_file(req.superchannel_path));
  const GaussianChannel c = io::parse_channel(io::load_json_file(req.channel_path));
  if (!validate_superchannel(sc).valid()) {
    out << "superchannel: invalid\n";
    return 1;
  }
  if (!validate_channel(c).valid()) {
    out << "channel: invalid (fails complete positivity)\n";
    return 1;
  }
  const GaussianChannel result = apply_superchannel(sc, c);
  if (req.format == "json")
    print_json(out, io::emit_channel(result));
  else
    print_channel_text(out, result);
  return 0;
}

int cmd_superchannel_decompose(const CommandRequest& req, std::ostream& out) {
  const GaussianSuperchannel sc =
      io::parse_superchannel(io::load_json_file(req.superchannel_path));
  if (!validate_superchannel(sc).valid()) {
    out << "superchannel: invalid\n";
    return 1;
  }
  const SuperchannelFactors f = decompose_superchannel(sc);
  if (req.format == "json") {
    json j{{"pre", io::emit_channel(f.pre)}, {"post", io::emit_channel(f.post)}};
    print_json(out, j);
  } else {
    out << "pre channel:\n";
    print_channel_text(out, f.pre);
    out << "post channel:\n";
    print_channel_text(out, f.post);
  }
  return 0;
}

int cmd_oracle_char(const CommandRequest& req, std::ostream& out) {
  const GaussianState s = io::parse_state(io::load_json_file(req.state_path));
  const FockDensityMatrix rho = gaussian_to_fock(s, req.cutoff);

  // 5 x 5 grid inside the |lambda| <= 1.5 disk.
  const double edge = 1.5 / std::sqrt(2.0);
  double worst = -1.0;
  std::complex<double> worst_analytic, worst_numeric, worst_lambda;
  std::ostringstream table;
  table << std::setw(9) << "re(l)" << std::setw(9) << "im(l)" << std::setw(14)
        << "analytic" << std::setw(14) << "numeric" << std::setw(12) << "abs_err"
        << "\n";
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const std::complex<double> l(-edge + a * edge / 2.0, -edge + b * edge / 2.0);
      Vec lv(2);
      lv << l.real(), l.imag();
      const std::complex<double> chi = char_function(s, lv);
      const std::complex<double> num = char_function_numeric(rho, l);
      const double err = std::abs(chi - num);
      table << std::setw(9) << l.real() << std::setw(9) << l.imag() << std::setw(14)
            << std::abs(chi) << std::setw(14) << std::abs(num) << std::setw(12) << err
            << "\n";
      if (err > worst) {
        worst = err;
        worst_analytic = chi;
        worst_numeric = num;
        worst_lambda = l;
      }
    }
  if (req.format == "json") {
    json j = io::emit_oracle_comparison(std::abs(worst_analytic), std::abs(worst_numeric),
                                        req.cutoff, rho.trace_deficit);
    j["abs_err"] = worst;
    j["lambda"] = {worst_lambda.real(), worst_lambda.imag()};
    print_json(out, j);
  } else {
    out << table.str();
    out << "worst abs_err: " << worst << " at lambda = (" << worst_lambda.real() << ", "
        << worst_lambda.imag() << "), trace deficit " << rho.trace_deficit << "\n";
  }
  return 0;
}

int cmd_oracle_cr(const CommandRequest& req, std::ostream& out) {
  const GaussianState s = io::parse_state(io::load_json_file(req.state_path));
  if (!validate_state(s).valid()) {
    out << "state: invalid (fails the uncertainty relation)\n";
    return 1;
  }
  const double analytic = cr_state(s);
  const FockCrResult numeric = cr_state_numeric(s, req.cutoff);
  if (req.format == "json") {
    json j = io::emit_oracle_comparison(analytic, numeric.value, req.cutoff,
                                        numeric.trace_deficit);
    j["argmin_nu"] = numeric.nu_opt;
    j["cutoff_insufficient"] = numeric.cutoff_insufficient;
    print_json(out, j);
  } else {
    out << "analytic:      " << analytic << " bits\n";
    out << "numeric:       " << numeric.value << " bits (argmin nu = " << numeric.nu_opt
        << ")\n";
    out << "abs_err:       " << std::abs(analytic - numeric.value) << "\n";
    out << "trace deficit: " << numeric.trace_deficit
        << (numeric.cutoff_insufficient ? "  [cutoff insufficient]" : "") << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian channel coherence toolkit"};
  app.require_subcommand(1);

  CommandRequest req;
  if (const char* seed = std::getenv("GAUSCOH_SEED"))
    req.sampler_seed = std::strtoull(seed, nullptr, 10);

  auto add_format = [&req](CLI::App* cmd) {
    cmd->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check an object's constraints");
  validate->add_option("--state", req.state_path)->check(CLI::ExistingFile);
  validate->add_option("--channel", req.channel_path)->check(CLI::ExistingFile);
  validate->add_option("--superchannel", req.superchannel_path)->check(CLI::ExistingFile);
  validate->add_option("--tol", req.tol, "validation tolerance");
  add_format(validate);

  CLI::App* classify = app.add_subcommand("classify", "incoherence classification");
  classify->add_option("--channel", req.channel_path)->check(CLI::ExistingFile);
  classify->add_option("--superchannel", req.superchannel_path)->check(CLI::ExistingFile);
  add_format(classify);

  CLI::App* apply = app.add_subcommand("apply", "apply a channel to a state");
  apply->add_option("--channel", req.channel_path)->required()->check(CLI::ExistingFile);
  apply->add_option("--state", req.state_path)->required()->check(CLI::ExistingFile);
  add_format(apply);

  CLI::App* coherence = app.add_subcommand("coherence", "relative-entropy coherence");
  coherence->add_option("--state", req.state_path)->check(CLI::ExistingFile);
  coherence->add_option("--channel", req.channel_path)->check(CLI::ExistingFile);
  coherence->add_option("--nu-max", req.nu_max, "thermal search box edge");
  coherence->add_flag("--strict", req.strict, "fail on divergent status");
  add_format(coherence);

  CLI::App* choi = app.add_subcommand("choi", "channel-state correspondence");
  choi->add_option("--channel", req.channel_path)->required()->check(CLI::ExistingFile);
  choi->add_option("--r", req.choi_r, "squeezing parameter")->required();
  add_format(choi);

  CLI::App* super = app.add_subcommand("superchannel", "superchannel operations");
  super->require_subcommand(1);
  CLI::App* sc_apply = super->add_subcommand("apply", "apply a superchannel to a channel");
  sc_apply->add_option("--sc", req.superchannel_path)->required()->check(CLI::ExistingFile);
  sc_apply->add_option("--channel", req.channel_path)->required()->check(CLI::ExistingFile);
  add_format(sc_apply);
  CLI::App* sc_dec = super->add_subcommand("decompose", "pre/post factorization");
  sc_dec->add_option("--sc", req.superchannel_path)->required()->check(CLI::ExistingFile);
  add_format(sc_dec);

  CLI::App* oracle = app.add_subcommand("oracle", "truncated number-basis cross-checks");
  oracle->require_subcommand(1);
  CLI::App* o_char = oracle->add_subcommand("char", "characteristic function bridge");
  o_char->add_option("--state", req.state_path)->required()->check(CLI::ExistingFile);
  o_char->add_option("--cutoff", req.cutoff, "truncation dimension");
  add_format(o_char);
  CLI::App* o_cr = oracle->add_subcommand("cr", "coherence bridge");
  o_cr->add_option("--state", req.state_path)->required()->check(CLI::ExistingFile);
  o_cr->add_option("--cutoff", req.cutoff, "truncation dimension");
  add_format(o_cr);

  std::vector<const char*> argv;
  argv.push_back("gausscoh");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      const int given = (!req.state_path.empty()) + (!req.channel_path.empty()) +
                        (!req.superchannel_path.empty());
      if (given != 1) {
        err << "error: validate needs exactly one of --state/--channel/--superchannel\n";
        return 2;
      }
      req.command = "validate";
      return cmd_validate(req, out);
    }
    if (classify->parsed()) {
      const int given = (!req.channel_path.empty()) + (!req.superchannel_path.empty());
      if (given != 1) {
        err << "error: classify needs exactly one of --channel/--superchannel\n";
        return 2;
      }
      req.command = "classify";
      return cmd_classify(req, out);
    }
    if (apply->parsed()) {
      req.command = "apply";
      return cmd_apply(req, out);
    }
    if (coherence->parsed()) {
      const int given = (!req.state_path.empty()) + (!req.channel_path.empty());
      if (given != 1) {
        err << "error: coherence needs exactly one of --state/--channel\n";
        return 2;
      }
      req.command = "coherence";
      return cmd_coherence(req, out);
    }
    if (choi->parsed()) {
      req.command = "choi";
      return cmd_choi(req, out);
    }
    if (super->parsed()) {
      req.command = "superchannel";
      if (sc_apply->parsed()) return cmd_superchannel_apply(req, out);
      return cmd_superchannel_decompose(req, out);
    }
    if (oracle->parsed()) {
      req.command = "oracle";
      if (o_char->parsed()) return cmd_oracle_char(req, out);
      return cmd_oracle_cr(req, out);
    }
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: unknown command\n";
  return 2;
}

}  // namespace gausscoh::cli
