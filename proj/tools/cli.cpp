#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/jacobi.hpp"
#include "cyclo/serialize.hpp"
#include "cyclo/verify.hpp"

namespace cyclo::cli {

namespace {

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t r = 1;
  std::string modulus;
};

struct SetupArgs {
  FieldArgs field;
  std::uint32_t e = 0;
  std::string generator;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "Field characteristic (prime)")->required();
  cmd->add_option("--r", args.r, "Extension degree")->capture_default_str();
  cmd->add_option("--modulus", args.modulus,
                  "Monic modulus as little-endian coefficients c0,...,cr");
}

void add_setup_options(CLI::App* cmd, SetupArgs& args) {
  add_field_options(cmd, args.field);
  cmd->add_option("--e", args.e, "Character order, must divide q - 1")->required();
  cmd->add_option("--generator", args.generator,
                  "Generator of F_q^* (residue, or c0,...,c{r-1})");
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(piece, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != piece.size() || value > 0xFFFF'FFFFul) {
      throw std::invalid_argument("malformed coefficient list '" + text + "'");
    }
    out.push_back(static_cast<std::uint32_t>(value));
  }
  return out;
}

Field make_field(const FieldArgs& args) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!args.modulus.empty()) modulus = parse_list(args.modulus);
  return Field::build(args.p, args.r, std::move(modulus));
}

CharacterSetup make_setup(const SetupArgs& args) {
  Field field = make_field(args.field);
  std::optional<FieldElement> g;
  if (!args.generator.empty()) g = field.parse(args.generator);
  return CharacterSetup::make(std::move(field), args.e, g);
}

std::string field_name(const FieldSpec& f) {
  return f.r == 1 ? "F_" + std::to_string(f.p)
                  : "F_" + std::to_string(f.q) + " = F_" + std::to_string(f.p) + "^" +
                        std::to_string(f.r);
}

std::string modulus_text(const FieldSpec& f) {
  std::string out;
  for (std::size_t t = f.modulus.size(); t-- > 0;) {
    const std::uint32_t c = f.modulus[t];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || t == 0) out += std::to_string(c);
    if (t > 0) out += (c != 1 ? "*x" : "x");
    if (t > 1) out += "^" + std::to_string(t);
  }
  return out;
}

std::string setup_header(const CharacterSetup& s) {
  std::ostringstream os;
  os << field_name(s.field().spec()) << ", e = " << s.order() << ", k = " << s.cofactor()
     << ", generator " << s.field().to_string(s.generator()) << " ("
     << to_string(s.symmetry().kind) << " rules)";
  return os.str();
}

template <typename Cell>
void print_grid(std::ostream& os, std::uint32_t e, char row, char col, Cell&& cell) {
  std::vector<std::string> text;
  std::size_t width = 1;
  for (std::uint32_t a = 0; a < e; ++a) {
    for (std::uint32_t b = 0; b < e; ++b) {
      text.push_back(cell(a, b));
      width = std::max(width, text.back().size());
    }
  }
  const std::string corner = std::string(1, row) + "\\" + col;
  const std::size_t label = std::max<std::size_t>(corner.size(), std::to_string(e).size() + 2);
  width = std::max(width, std::to_string(e).size() + 2);
  os << std::left << std::setw(static_cast<int>(label)) << corner;
  for (std::uint32_t b = 0; b < e; ++b) {
    os << "  " << std::right << std::setw(static_cast<int>(width)) << b;
  }
  os << '\n';
  for (std::uint32_t a = 0; a < e; ++a) {
    os << std::left << std::setw(static_cast<int>(label)) << a;
    for (std::uint32_t b = 0; b < e; ++b) {
      os << "  " << std::right << std::setw(static_cast<int>(width)) << text[a * e + b];
    }
    os << '\n';
  }
}

std::string pair_text(const IndexPair& x) {
  return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")";
}

Family parse_family(const std::string& name) {
  return name == "jacobi" ? Family::Jacobi : Family::Cyclotomic;
}

// Writes to --out when given, else to out.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  file << text;
}

std::string cmd_field(const FieldArgs& args, const std::string& format) {
  const Field field = make_field(args);
  const FieldElement g = field.find_generator();
  if (format == "json") {
    Json j;
    j["field"] = to_json(field.spec());
    j["generator"] = element_to_json(field, g);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << field_name(field.spec()) << '\n';
  os << "p = " << field.p() << ", r = " << field.r() << ", q = " << field.q() << '\n';
  if (!field.spec().modulus.empty()) os << "modulus: " << modulus_text(field.spec()) << '\n';
  os << "generator: " << field.to_string(g) << '\n';
  return os.str();
}

std::string cmd_compute(const SetupArgs& args, const std::string& family_name,
                        const std::string& method, const std::string& format) {
  const CharacterSetup s = make_setup(args);
  const Family family = parse_family(family_name);
  const std::uint32_t e = s.order();
  WorkStats stats{std::size_t{e} * e, 0};
  std::string note;

  std::ostringstream os;
  if (family == Family::Cyclotomic) {
    CycNumMatrix m;
    if (method == "reps") {
      m = cyclotomic_via_reps(s, &stats);
    } else if (method == "convert") {
      m = cyclotomic_from_jacobi(jacobi_all_direct(s), s);
      note = "derived from Jacobi sums";
    } else {
      m = cyclotomic_direct(s);
    }
    if (format == "json") return to_json(m, s.field()).dump(2) + "\n";
    if (format == "csv") return to_csv(m);
    os << "cyclotomic numbers (a,b), " << setup_header(s) << '\n';
    print_grid(os, e, 'a', 'b', [&](std::uint32_t a, std::uint32_t b) {
      return std::to_string(m.at(a, b));
    });
  } else {
    JacobiMatrix m;
    if (method == "reps") {
      m = jacobi_via_reps(s, &stats);
    } else if (method == "convert") {
      m = jacobi_from_cyclotomic(cyclotomic_direct(s), s);
      note = "derived from cyclotomic numbers";
    } else {
      m = jacobi_all_direct(s);
    }
    if (format == "json") return to_json(m, s.field()).dump(2) + "\n";
    if (format == "csv") return to_csv(m);
    os << "Jacobi sums J(i,j), " << setup_header(s) << ", z = zeta_" << e << '\n';
    print_grid(os, e, 'i', 'j', [&](std::uint32_t i, std::uint32_t j) {
      return m.at(i, j).to_string();
    });
  }
  if (method == "reps") {
    os << "direct entries: " << stats.direct_entries << " of " << e * e << " ("
       << stats.derived_entries << " derived by orbit expansion)\n";
  }
  if (!note.empty()) os << note << '\n';
  return os.str();
}

std::string cmd_classes(std::uint32_t e, const std::string& case_name,
                        const std::string& family_name, const std::string& format) {
  const RuleKind kind = case_name == "odd" ? RuleKind::Odd : RuleKind::Even;
  const SymmetryCase sc = make_case(kind, e);
  const Family family = parse_family(family_name);
  // Only the parity of k enters the orbits, and odd rules imply odd k.
  const std::uint64_t k = kind == RuleKind::Odd ? 1 : 2;
  const auto classes = enumerate_classes(sc, family, k);

  if (format == "json") {
    Json j;
    j["e"] = e;
    j["case"] = std::string(to_string(kind));
    j["family"] = std::string(to_string(family));
    Json list = Json::array();
    for (const auto& c : classes) list.push_back(to_json(c));
    j["classes"] = std::move(list);
    j["enumerated_count"] = classes.size();
    j["closed_form_count"] = class_count(e);
    j["stated_closed_form_count"] = stated_class_count(e);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << to_string(family) << " classes, e = " << e << ", " << to_string(kind) << " rules\n";
  const bool signed_members = family == Family::Jacobi && kind == RuleKind::Odd;
  for (const auto& c : classes) {
    os << std::left << std::setw(10) << pair_text(c.representative) << " size "
       << c.size() << ":";
    for (std::size_t n = 0; n < c.members.size(); ++n) {
      os << ' ';
      if (signed_members) os << (c.signs[n] > 0 ? '+' : '-');
      os << pair_text(c.members[n]);
    }
    os << '\n';
  }
  os << "enumerated classes: " << classes.size() << '\n';
  os << "closed form: " << class_count(e) << '\n';
  if (stated_class_count(e) != class_count(e)) {
    os << "closed form with +1: " << stated_class_count(e) << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclotomic numbers and Jacobi sums over finite fields"};
  app.name("cyclo");
  app.require_subcommand(1);

  std::string format = "table";
  std::string out_path;
  std::string family = "cyclotomic";
  std::string method = "direct";
  std::string case_name = "even";
  bool timing = false;

  FieldArgs field_args;
  auto* field_cmd = app.add_subcommand("field", "Build a finite field and find its generator");
  add_field_options(field_cmd, field_args);
  field_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  field_cmd->add_option("--out", out_path, "Write output to FILE");

  SetupArgs compute_args;
  auto* compute_cmd = app.add_subcommand("compute", "Compute a full matrix");
  add_setup_options(compute_cmd, compute_args);
  compute_cmd->add_option("--family", family)->check(CLI::IsMember({"cyclotomic", "jacobi"}));
  compute_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"direct", "reps", "convert"}));
  compute_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
  compute_cmd->add_option("--out", out_path, "Write output to FILE");

  std::uint32_t classes_e = 0;
  auto* classes_cmd = app.add_subcommand("classes", "List symmetry classes of index pairs");
  classes_cmd->add_option("--e", classes_e, "Order")->required()->check(CLI::PositiveNumber);
  classes_cmd->add_option("--case", case_name)->check(CLI::IsMember({"even", "odd"}));
  classes_cmd->add_option("--family", family)->check(CLI::IsMember({"cyclotomic", "jacobi"}));
  classes_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  classes_cmd->add_option("--out", out_path, "Write output to FILE");

  SetupArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check and emit a JSON report");
  add_setup_options(verify_cmd, verify_args);
  verify_cmd->add_flag("--timing", timing, "Include wall-clock timings (non-deterministic)");
  verify_cmd->add_option("--out", out_path, "Write output to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*field_cmd) {
      emit(cmd_field(field_args, format), out_path, out);
    } else if (*compute_cmd) {
      emit(cmd_compute(compute_args, family, method, format), out_path, out);
    } else if (*classes_cmd) {
      emit(cmd_classes(classes_e, case_name, family, format), out_path, out);
    } else if (*verify_cmd) {
      const VerifyReport report = run_verify(make_setup(verify_args), timing);
      emit(to_json(report).dump(2) + "\n", out_path, out);
      if (!report.passed()) {
        err << "verification failed\n";
        return kInconsistency;
      }
    }
  } catch (const InconsistencyError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInconsistency;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kInconsistency;
  }
  return kSuccess;
}

}  // namespace cyclo::cli
