#pragma once

#include "amal/canonical.hpp"
#include "amal/geodesics.hpp"
#include "amal/normal_form.hpp"
#include "amal/oracle.hpp"
#include "amal/ratfun.hpp"
#include "amal/series.hpp"
#include "amal/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace amal {

namespace detail {

inline Presentation parse_p(const std::string& s) {
  std::vector<int> p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(std::stoi(item));
  return Presentation(std::move(p));
}

inline nlohmann::json coeff_array(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

inline std::string gamma_class_str(const GammaMembership& gm) {
  if (gm.gamma1) return "Gamma_1";
  if (gm.gamma2) return "Gamma_2";
  if (gm.gamma3_plus && gm.gamma3_minus) return "Gamma_3+&3-";
  if (gm.gamma3_plus) return "Gamma_3+";
  if (gm.gamma3_minus) return "Gamma_3-";
  if (!gm.gamma30.empty()) return "Gamma_3.0 " + gm.gamma30.front().str();
  return "none";
}

} // namespace detail

/// Command-line driver; returns the process exit status (0 ok, 1 verification
/// mismatch, 2 parse/usage errors).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, geodesics and spherical growth series of the groups "
               "G(p1,...,pn) = <x1,...,xn | x1^p1 = ... = xn^pn>"};
  app.require_subcommand(1);

  std::string pstr, word, format = "plain";
  int upto = 20, depth = 10;
  std::uint64_t cap = 0;
  bool json = false;

  auto* series_cmd = app.add_subcommand("series", "print the growth series");
  series_cmd->add_option("--p", pstr, "exponent tuple, e.g. 2,3,7")->required();
  series_cmd->add_option("--format", format, "plain|latex|factored")
      ->check(CLI::IsMember({"plain", "latex", "factored"}));
  series_cmd->add_flag("--json", json, "JSON envelope");

  auto* coeffs_cmd = app.add_subcommand("coeffs", "expand series coefficients");
  coeffs_cmd->add_option("--p", pstr)->required();
  coeffs_cmd->add_option("--upto", upto, "highest power")->required();
  coeffs_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "closed form vs brute-force sphere counts");
  verify_cmd->add_option("--p", pstr)->required();
  verify_cmd->add_option("--depth", depth, "BFS depth")->required();

  auto* nf_cmd = app.add_subcommand("normalform", "normal forms of a word");
  nf_cmd->add_option("--p", pstr)->required();
  nf_cmd->add_option("--word", word, "word, e.g. \"x2^2 x3^-3 D^-3\"")->required();

  auto* geo_cmd = app.add_subcommand("geodesics", "all geodesic representatives");
  geo_cmd->add_option("--p", pstr)->required();
  geo_cmd->add_option("--word", word)->required();
  geo_cmd->add_option("--cap", cap, "list at most this many; count-only beyond");

  auto* canon_cmd = app.add_subcommand("canonical", "the proper geodesic representative");
  canon_cmd->add_option("--p", pstr)->required();
  canon_cmd->add_option("--word", word)->required();

  std::vector<std::string> argv{"amal"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> cargv;
  cargv.reserve(argv.size());
  for (auto& a : argv) cargv.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    const Presentation pres = detail::parse_p(pstr);

    if (app.got_subcommand(series_cmd)) {
      const RatFun s = growth_series(pres);
      if (json) {
        nlohmann::json j;
        j["p"] = pres.exponents();
        j["numerator_coeffs"] = detail::coeff_array(s.num());
        j["denominator_coeffs"] = detail::coeff_array(s.den());
        out << j.dump() << "\n";
      } else if (format == "latex") {
        out << s.latex() << "\n";
      } else if (format == "factored") {
        out << factored_str(s) << "\n";
      } else {
        out << s.str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(coeffs_cmd)) {
      const RatFun s = growth_series(pres);
      const auto c = s.taylor_int(upto);
      if (json) {
        nlohmann::json j;
        j["p"] = pres.exponents();
        j["numerator_coeffs"] = detail::coeff_array(s.num());
        j["denominator_coeffs"] = detail::coeff_array(s.den());
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : c) arr.push_back(x.str());
        j["coefficients"] = arr;
        out << j.dump() << "\n";
      } else {
        for (std::size_t l = 0; l < c.size(); ++l) out << l << " " << c[l] << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      const RatFun s = growth_series(pres);
      const auto closed = s.taylor_int(depth);
      const SphereTable table = bfs_spheres(pres, depth);
      bool ok = table.complete;
      out << "l  closed-form  bfs\n";
      for (int l = 0; l <= table.max_len; ++l) {
        const bool match = closed[static_cast<std::size_t>(l)] == BigInt(table.counts[static_cast<std::size_t>(l)]);
        ok = ok && match;
        out << l << "  " << closed[static_cast<std::size_t>(l)] << "  "
            << table.counts[static_cast<std::size_t>(l)] << (match ? "" : "  MISMATCH") << "\n";
      }
      if (!table.complete) out << "(table incomplete: memory budget reached)\n";
      out << (ok ? "VERIFIED" : "FAILED") << "\n";
      return ok ? 0 : 1;
    }

    // Remaining subcommands share a parsed word.
    const auto letters = parse_letters(pres, word);
    const SyllableWord lambda = to_lambda(pres, letters);
    const GarsideNf gnf = garside_nf(pres, lambda);
    const ModifiedNf mnf = modified_nf(pres, gnf);

    if (app.got_subcommand(nf_cmd)) {
      const RNuData rn = r_nu(pres, mnf);
      out << "lambda:   " << format_word(lambda) << "\n";
      out << "garside:  " << format_word(SyllableWord(gnf.syllables, gnf.delta_pow)) << "\n";
      out << "modified: " << format_word(mnf.as_word()) << "\n";
      out << "R_nu:     {";
      for (std::size_t i = 0; i < rn.r_set.size(); ++i)
        out << (i ? "," : "") << rn.r_set[i] + 1;
      out << "}\n";
      out << "r_nu:     " << rn.r_nu << "\n";
      out << "type:     " << to_string(classify(pres, mnf)) << "\n";
      return 0;
    }

    if (app.got_subcommand(geo_cmd)) {
      const std::optional<std::uint64_t> capopt =
          cap > 0 ? std::optional<std::uint64_t>(cap) : std::nullopt;
      if (capopt && classify(pres, mnf) == TypeTag::Type3Zero) {
        const CeEnumeration ce = enumerate_ce(pres, mnf, capopt);
        if (ce.truncated) {
          out << "count: " << ce.total.str() << " (above cap, not listed)\n";
          return 0;
        }
      }
      const auto ss = suitable_spread(pres, mnf);
      for (const auto& w : ss) out << format_word(w) << "\n";
      out << "count: " << ss.size() << "\n";
      out << "length: " << geodesic_length(pres, mnf) << "\n";
      return 0;
    }

    if (app.got_subcommand(canon_cmd)) {
      const Reindexing rx = reindex(pres);
      const SyllableWord nu_hat = canonical_spread(pres, rx, mnf);
      const GammaMembership gm = gamma_membership(pres, rx, nu_hat);
      out << "canonical: " << format_word(nu_hat) << "\n";
      out << "class:     " << detail::gamma_class_str(gm) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace amal
