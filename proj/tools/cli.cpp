#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "burnside/action.hpp"
#include "burnside/counting.hpp"
#include "burnside/number_theory.hpp"
#include "burnside/permutation.hpp"
#include "burnside/serialize.hpp"
#include "burnside/verifiers.hpp"

namespace burnside::cli {
namespace {

std::uint64_t parse_natural(const std::string& text, const std::string& name) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError(name + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

Count parse_integer(const std::string& text, const std::string& name) {
  const bool negative = !text.empty() && text.front() == '-';
  const std::string digits = negative ? text.substr(1) : text;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError(name + " must be an integer, got '" + text + "'");
  }
  Count value(digits);
  return negative ? Count(-value) : value;
}

FixedPointMode parse_mode(const std::string& text) {
  if (text == "auto") return FixedPointMode::automatic;
  if (text == "enumerate") return FixedPointMode::enumerated;
  return FixedPointMode::analytic;
}

void render_witness(std::ostream& out, const Json& witness) {
  for (const auto& [key, value] : witness.items()) {
    if (key == "summands") {
      for (const auto& s : value) {
        out << "  d=" << s["d"].get<std::uint64_t>() << "  phi=" << s["phi"].get<std::uint64_t>()
            << '\n';
      }
      continue;
    }
    out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

void render(std::ostream& out, const VerificationResult& result) {
  out << to_string(result.theorem) << " via " << to_string(result.route) << '\n';
  for (const auto& [name, value] : result.inputs) out << "  " << name << " = " << value << '\n';
  render_witness(out, result.witness);
  out << (result.verified ? "verified" : "NOT verified") << '\n';
}

void render(std::ostream& out, const FixedPointTable& table) {
  std::size_t width = 0;
  for (const auto& e : table.entries) width = std::max(width, e.element_label.size());
  for (const auto& e : table.entries) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << e.element_label << "  "
        << e.fixed_count << '\n';
  }
  out << "  total  " << table.total << '\n';
}

void render(std::ostream& out, const OrbitReport& report) {
  out << "n=" << report.n << " q=" << report.q << " |G|=" << report.group_order
      << " method=" << to_string(report.method) << '\n';
  if (report.fixed_table) render(out, *report.fixed_table);
  if (report.fixed_sum) out << "fixed-point sum: " << *report.fixed_sum << '\n';
  out << "orbits: " << report.orbit_count << '\n';
}

void render(std::ostream& out, const CongruenceReport& report) {
  out << "C_" << report.p << "^" << report.j << " on " << report.q << "-ary tuples of length "
      << power(report.p, report.j) << " (" << to_string(report.mode) << ")\n"
      << "  |S|   = " << report.set_size << " = " << report.set_residue << " mod " << report.p
      << '\n'
      << "  |S^G| = " << report.fixed_size << " = " << report.fixed_residue << " mod "
      << report.p << '\n'
      << (report.congruent ? "congruent" : "NOT congruent") << '\n';
}

void emit(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

struct Options {
  bool json = false;
  std::optional<std::uint64_t> cap_flag;
  std::string n_text, q_text, a_text, p_text, j_text;
  std::vector<std::string> methods;
  std::string phi_method = "direct";
  std::string fermat_method = "modular";
  std::string mode = "auto";
  std::uint64_t power = 1;
  bool list = false;
};

std::uint64_t resolve_cap(const Options& options, const std::optional<std::string>& env_cap) {
  if (options.cap_flag) return *options.cap_flag;
  if (env_cap) return parse_natural(*env_cap, kCapEnvironmentVariable);
  return kDefaultEnumerationCap;
}

int run_bracelets(const Options& o, std::uint64_t cap, std::ostream& out) {
  const std::uint64_t n = parse_natural(o.n_text, "N");
  const std::uint64_t q = parse_natural(o.q_text, "Q");
  std::vector<std::string> methods = o.methods.empty() ? std::vector<std::string>{"closed"}
                                                       : o.methods;
  if (std::find(methods.begin(), methods.end(), "all") != methods.end()) {
    methods = {"closed", "burnside", "brute"};
  }
  std::vector<OrbitReport> reports;
  for (const auto& method : methods) {
    if (method == "closed") {
      reports.push_back(closed_form_orbit_count(n, q));
    } else if (method == "burnside") {
      reports.push_back(burnside_orbit_count(dihedral(n), q));
    } else {
      reports.push_back(brute_force_orbit_count(n, q, cap));
    }
  }
  const bool agree = std::all_of(reports.begin(), reports.end(), [&](const OrbitReport& r) {
    return r.orbit_count == reports.front().orbit_count;
  });

  if (reports.size() == 1) {
    if (o.json) {
      emit(out, to_json(reports.front()));
    } else {
      render(out, reports.front());
    }
    return kSuccess;
  }
  if (o.json) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    Json json;
    json["n"] = n;
    json["q"] = q;
    json["agree"] = agree;
    json["orbitCount"] = agree ? to_json(reports.front().orbit_count) : Json(nullptr);
    json["reports"] = std::move(all);
    emit(out, json);
  } else {
    for (const auto& r : reports) render(out, r);
    out << (agree ? "methods agree" : "METHODS DISAGREE") << '\n';
  }
  return agree ? kSuccess : kFalsified;
}

int run_orbits(const Options& o, std::uint64_t cap, std::ostream& out) {
  const std::uint64_t n = parse_natural(o.n_text, "N");
  const std::uint64_t q = parse_natural(o.q_text, "Q");
  const PermutationGroup group = dihedral(n);
  const auto representatives = enumerate_orbits(group, q, cap);
  if (o.json) {
    Json json;
    json["n"] = n;
    json["q"] = q;
    json["groupOrder"] = group.order();
    json["orbitCount"] = to_json(Count(representatives.size()));
    if (o.list) {
      Json list = Json::array();
      for (const auto& r : representatives) list.push_back(to_json(r));
      json["representatives"] = std::move(list);
    }
    emit(out, json);
    return kSuccess;
  }
  out << "n=" << n << " q=" << q << " |G|=" << group.order() << '\n';
  out << "orbits: " << representatives.size() << '\n';
  if (o.list) {
    for (const auto& r : representatives) {
      out << " ";
      for (Color c : r.cells()) out << ' ' << c;
      out << '\n';
    }
  }
  return kSuccess;
}

int dispatch(const std::string& command, const Options& o, std::uint64_t cap, std::ostream& out) {
  if (command == "phi") {
    const std::uint64_t n = parse_natural(o.n_text, "N");
    const std::uint64_t phi = euler_phi(n);
    if (o.json) {
      emit(out, Json{{"n", n}, {"phi", phi}});
    } else {
      out << "phi(" << n << ") = " << phi << '\n';
    }
    return kSuccess;
  }
  if (command == "divisors") {
    const std::uint64_t n = parse_natural(o.n_text, "N");
    const auto ds = divisors(n);
    if (o.json) {
      emit(out, Json{{"n", n}, {"divisors", ds}});
    } else {
      out << "divisors(" << n << ") =";
      for (auto d : ds) out << ' ' << d;
      out << '\n';
    }
    return kSuccess;
  }
  if (command == "phi-sum") {
    const std::uint64_t n = parse_natural(o.n_text, "N");
    const auto result = o.phi_method == "burnside" ? verify_phi_sum_burnside(n, cap)
                                                   : verify_phi_sum_direct(n);
    o.json ? emit(out, to_json(result)) : render(out, result);
    return result.verified ? kSuccess : kFalsified;
  }
  if (command == "bracelets") return run_bracelets(o, cap, out);
  if (command == "fixed-table") {
    const std::uint64_t n = parse_natural(o.n_text, "N");
    const std::uint64_t q = parse_natural(o.q_text, "Q");
    const auto table = fixed_point_table(dihedral(n), q);
    o.json ? emit(out, to_json(table)) : render(out, table);
    return kSuccess;
  }
  if (command == "orbits") return run_orbits(o, cap, out);
  if (command == "fermat") {
    const std::uint64_t p = parse_natural(o.p_text, "P");
    VerificationResult result;
    if (o.fermat_method == "action") {
      const std::uint64_t a = parse_natural(o.a_text, "A");
      result = verify_fermat_action(a, p, o.power, parse_mode(o.mode), cap);
    } else {
      result = verify_fermat_modular(parse_integer(o.a_text, "A"), p, o.power);
    }
    o.json ? emit(out, to_json(result)) : render(out, result);
    return result.verified ? kSuccess : kFalsified;
  }
  if (command == "congruence") {
    const auto report =
        class_equation_congruence(parse_natural(o.p_text, "P"), parse_natural(o.j_text, "J"),
                                  parse_natural(o.q_text, "Q"), parse_mode(o.mode), cap);
    o.json ? emit(out, to_json(report)) : render(out, report);
    return report.congruent ? kSuccess : kFalsified;
  }
  throw UsageError("unknown command " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_cap) {
  Options o;
  CLI::App app{"Exact orbit counting and group-action verifications", "burnside"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit one JSON object on stdout");
  app.add_option("--cap", o.cap_flag,
                 std::string("Enumeration cap in colorings (default 10000000; env ") +
                     kCapEnvironmentVariable + ")");

  const auto modes = CLI::IsMember({"auto", "enumerate", "analytic"});

  auto* phi = app.add_subcommand("phi", "Euler phi of N");
  phi->add_option("N", o.n_text)->required();

  auto* divs = app.add_subcommand("divisors", "Divisors of N");
  divs->add_option("N", o.n_text)->required();

  auto* phi_sum = app.add_subcommand("phi-sum", "Check that phi summed over the divisors of N is N");
  phi_sum->add_option("N", o.n_text)->required();
  phi_sum->add_option("--method", o.phi_method)->check(CLI::IsMember({"direct", "burnside"}));

  auto* bracelets = app.add_subcommand("bracelets", "Count q-colorings of the edges of an n-gon up to D_n");
  bracelets->add_option("N", o.n_text)->required();
  bracelets->add_option("Q", o.q_text)->required();
  bracelets->add_option("--method", o.methods, "closed, burnside, brute or all; repeatable")
      ->delimiter(',')
      ->check(CLI::IsMember({"closed", "burnside", "brute", "all"}));

  auto* table = app.add_subcommand("fixed-table", "Per-element fixed-point counts for D_n");
  table->add_option("N", o.n_text)->required();
  table->add_option("Q", o.q_text)->required();

  auto* orbits = app.add_subcommand("orbits", "Enumerate D_n orbits by canonical form");
  orbits->add_option("N", o.n_text)->required();
  orbits->add_option("Q", o.q_text)->required();
  orbits->add_flag("--list", o.list, "Print the canonical representatives");

  auto* fermat = app.add_subcommand("fermat", "Check a^(p^j) = a (mod p)");
  fermat->add_option("A", o.a_text)->required();
  fermat->add_option("P", o.p_text)->required();
  fermat->add_option("--power", o.power, "Exponent j in p^j")->check(CLI::PositiveNumber);
  fermat->add_option("--method", o.fermat_method)->check(CLI::IsMember({"modular", "action"}));
  fermat->add_option("--mode", o.mode, "Fixed-point mode for the action route")->check(modes);

  auto* congruence = app.add_subcommand("congruence", "Check |S| = |S^G| (mod p) for C_(p^j)");
  congruence->add_option("P", o.p_text)->required();
  congruence->add_option("J", o.j_text)->required();
  congruence->add_option("Q", o.q_text)->required();
  congruence->add_option("--mode", o.mode)->check(modes);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "burnside: " << e.what() << '\n' << "Run with --help for usage.\n";
    return kUsageError;
  }

  std::ostringstream buffer;
  try {
    const std::uint64_t cap = resolve_cap(o, env_cap);
    const int status = dispatch(app.get_subcommands().front()->get_name(), o, cap, buffer);
    out << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "burnside: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "burnside: " << e.what() << " (raise it with --cap)\n";
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "burnside: internal inconsistency: " << e.what() << '\n';
    return kFalsified;
  }
}

}  // namespace burnside::cli
