#include "cvq/states/state_spec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>

#include "cvq/error.hpp"
#include "cvq/util/kv.hpp"

namespace cvq {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kNames{{
    {Family::GaussianSqueezed, "gaussian_squeezed"},
    {Family::CubicPhase, "cubic_phase"},
    {Family::FockTruncation, "fock_truncation"},
    {Family::OperatorTruncation, "operator_truncation"},
    {Family::Trisqueezed, "trisqueezed"},
    {Family::BlochSuperposition, "bloch_superposition"},
}};

constexpr std::size_t kMaxBlochCutoff = 16;

std::set<std::string_view> declared_keys(Family f) {
  switch (f) {
    case Family::GaussianSqueezed: return {"r"};
    case Family::CubicPhase:
    case Family::FockTruncation:
    case Family::OperatorTruncation: return {"a", "r"};
    case Family::Trisqueezed: return {"f", "s", "t"};
    case Family::BlochSuperposition: return {"n", "theta", "phi", "r_b", "d"};
  }
  return {};
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames)
    if (n == name) return fam;
  throw ConfigError("unknown state family '" + std::string(name) + "'");
}

StateSpec StateSpec::gaussian_squeezed(double r) {
  StateSpec s;
  s.family = Family::GaussianSqueezed;
  s.r = r;
  return s;
}

StateSpec StateSpec::cubic_phase(double a, double r) {
  StateSpec s;
  s.family = Family::CubicPhase;
  s.a = a;
  s.r = r;
  return s;
}

StateSpec StateSpec::fock_truncation(double a, double r) {
  StateSpec s = cubic_phase(a, r);
  s.family = Family::FockTruncation;
  return s;
}

StateSpec StateSpec::operator_truncation(double a, double r) {
  StateSpec s = cubic_phase(a, r);
  s.family = Family::OperatorTruncation;
  return s;
}

StateSpec StateSpec::trisqueezed(cplx f, double s_, double t_) {
  StateSpec s;
  s.family = Family::Trisqueezed;
  s.f = f;
  s.s = s_;
  s.t = t_;
  return s;
}

StateSpec StateSpec::bloch(std::vector<double> theta, std::vector<double> phi, double r_b,
                           double d) {
  StateSpec s;
  s.family = Family::BlochSuperposition;
  s.theta = std::move(theta);
  s.phi = std::move(phi);
  s.r_b = r_b;
  s.d = d;
  return s;
}

double StateSpec::max_abs_squeeze() const noexcept {
  switch (family) {
    case Family::Trisqueezed: return std::abs(t);
    case Family::BlochSuperposition: return std::abs(r_b);
    default: return std::abs(r);
  }
}

void StateSpec::validate() const {
  const auto keys = declared_keys(family);
  auto unused = [&](std::string_view key, bool is_set) {
    if (is_set && !keys.count(key)) {
      throw ContractError("state spec: field '" + std::string(key) + "' is not used by family " +
                          std::string(family_name(family)));
    }
  };
  unused("a", a != 0.0);
  unused("r", r != 0.0);
  unused("f", f != cplx(0.0));
  unused("s", s != 0.0);
  unused("t", t != 0.0);
  unused("theta", !theta.empty());
  unused("phi", !phi.empty());
  unused("r_b", r_b != 0.0);
  unused("d", d != 0.0);

  if (!finite(a) || !finite(r) || !finite(f.real()) || !finite(f.imag()) || !finite(s) ||
      !finite(t) || !finite(r_b) || !finite(d)) {
    throw ContractError("state spec: non-finite parameter");
  }
  if (a < 0.0) throw ContractError("state spec: cubic strength a must be >= 0");
  if (theta.size() != phi.size()) {
    throw ContractError("state spec: theta and phi must both have length N");
  }
  if (theta.size() > kMaxBlochCutoff) throw ContractError("state spec: N must be <= 16");
  if (!std::all_of(theta.begin(), theta.end(), finite) ||
      !std::all_of(phi.begin(), phi.end(), finite)) {
    throw ContractError("state spec: non-finite Bloch angle");
  }
  if (family == Family::Trisqueezed && std::abs(f) > 0.15) {
    throw ContractError("state spec: |f| must be <= 0.15");
  }
}

std::string StateSpec::serialize() const {
  std::ostringstream out;
  out << "family = " << family_name(family) << '\n';
  switch (family) {
    case Family::GaussianSqueezed:
      out << "r = " << kv::format(r) << '\n';
      break;
    case Family::CubicPhase:
    case Family::FockTruncation:
    case Family::OperatorTruncation:
      out << "a = " << kv::format(a) << '\n' << "r = " << kv::format(r) << '\n';
      break;
    case Family::Trisqueezed:
      out << "f = " << kv::format(f.real());
      if (f.imag() != 0.0) out << ", " << kv::format(f.imag());
      out << '\n' << "s = " << kv::format(s) << '\n' << "t = " << kv::format(t) << '\n';
      break;
    case Family::BlochSuperposition:
      out << "n = " << theta.size() << '\n'
          << "theta = " << kv::format(theta) << '\n'
          << "phi = " << kv::format(phi) << '\n'
          << "r_b = " << kv::format(r_b) << '\n'
          << "d = " << kv::format(d) << '\n';
      break;
  }
  return out.str();
}

StateSpec StateSpec::parse(std::string_view text) {
  const auto pairs = kv::parse(text);
  auto fam = std::find_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.first == "family"; });
  if (fam == pairs.end()) throw ConfigError("state spec: missing 'family'");
  StateSpec spec;
  spec.family = parse_family(fam->second);
  const auto keys = declared_keys(spec.family);
  long long n = -1;
  for (const auto& [key, value] : pairs) {
    if (key == "family") continue;
    if (!keys.count(key)) {
      throw ConfigError("state spec: key '" + key + "' is not used by family " + fam->second);
    }
    if (key == "a") spec.a = kv::to_double(key, value);
    else if (key == "r") spec.r = kv::to_double(key, value);
    else if (key == "s") spec.s = kv::to_double(key, value);
    else if (key == "t") spec.t = kv::to_double(key, value);
    else if (key == "r_b") spec.r_b = kv::to_double(key, value);
    else if (key == "d") spec.d = kv::to_double(key, value);
    else if (key == "theta") spec.theta = kv::to_doubles(key, value);
    else if (key == "phi") spec.phi = kv::to_doubles(key, value);
    else if (key == "n") n = kv::to_int(key, value);
    else if (key == "f") {
      const auto parts = kv::to_doubles(key, value);
      if (parts.empty() || parts.size() > 2) throw ConfigError("state spec: f takes 're' or 're, im'");
      spec.f = {parts[0], parts.size() == 2 ? parts[1] : 0.0};
    }
  }
  if (spec.family == Family::BlochSuperposition) {
    if (n < 0) throw ConfigError("state spec: bloch_superposition needs 'n'");
    if (static_cast<std::size_t>(n) != spec.theta.size() ||
        static_cast<std::size_t>(n) != spec.phi.size()) {
      throw ConfigError("state spec: theta and phi must each list n angles");
    }
  }
  spec.validate();
  return spec;
}

std::vector<cplx> bloch_coefficients(const std::vector<double>& theta,
                                     const std::vector<double>& phi) {
  if (theta.size() != phi.size()) throw ContractError("bloch_coefficients: length mismatch");
  const std::size_t n = theta.size();
  std::vector<cplx> c(n + 1);
  if (n == 0) {
    c[0] = 1.0;
    return c;
  }
  c[0] = std::cos(theta[0]);
  double sin_prod = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    sin_prod *= std::sin(theta[j - 1]);
    const double radial = j < n ? sin_prod * std::cos(theta[j]) : sin_prod;
    c[j] = {radial * std::cos(phi[j - 1]), radial * std::sin(phi[j - 1])};
  }
  double n2 = 0.0;
  for (const cplx& v : c) n2 += std::norm(v);
  if (std::abs(n2 - 1.0) > 1e-12) throw AccuracyError("bloch_coefficients: norm defect");
  return c;
}

}  // namespace cvq
