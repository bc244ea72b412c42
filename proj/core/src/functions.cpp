#include "mockforms/functions.hpp"

#include <algorithm>

namespace mockforms {

namespace {

using Args = std::map<std::string, std::string>;

const std::map<std::string, Args>& table() {
  static const std::map<std::string, Args> t{
      {"theta", {{"j", "0"}, {"level", "1"}, {"sign", "plus"}, {"K", "1"}, {"alpha", "1"}, {"beta", "0"}, {"gamma", "0"}}},
      {"eta", {{"k", "1"}}},
      {"vartheta", {{"kind", "11"}, {"K", "1"}, {"alpha", "1"}, {"beta", "0"}, {"gamma", "0"}}},
      // default arguments are those of the numerator at p = 0
      {"phi",
       {{"m", "1"}, {"s", "0"}, {"sign", "none"}, {"part", "full"}, {"K", "2"},
        {"alpha1", "1"}, {"beta1", "1/2"}, {"gamma1", "-1/2"},
        {"alpha2", "1"}, {"beta2", "-1/2"}, {"gamma2", "1/2"}, {"t", "0"}}},
      {"numerator", {{"m", "1"}, {"s", "0"}, {"p", "0"}}},
  };
  return t;
}

const std::vector<std::string> WORDS{"sign", "part", "kind", "t"};

ExpRational R(const Args& a, const std::string& k) { return ExpRational::parse(a.at(k)); }

long L(const Args& a, const std::string& k) {
  ExpRational v = R(a, k);
  if (!v.is_integer()) throw InvalidParams(k + " must be an integer, got " + a.at(k));
  return v.num().get_si();
}

long positive(const Args& a, const std::string& k) {
  long v = L(a, k);
  if (v <= 0) throw InvalidParams(k + " must be a positive integer, got " + a.at(k));
  return v;
}

AffineArg affine(const Args& a, const std::string& suffix) {
  return {R(a, "alpha" + suffix), R(a, "beta" + suffix), R(a, "gamma" + suffix)};
}

std::complex<double> at(const AffineArg& g, std::complex<double> tau, std::complex<double> z) {
  return g.alpha.to_double() * z + g.beta.to_double() * tau + g.gamma.to_double();
}

PhiParams phi_params(const Args& a) {
  PhiParams p;
  p.m = R(a, "m");
  p.s = R(a, "s");
  SignVariant v = parse_sign_variant(a.at("sign"));
  p.variant = v == SignVariant::minus ? SignVariant::minus : SignVariant::none;
  p.part = parse_phi_part(a.at("part"));
  if (p.m.sign() <= 0) throw InvalidParams("m must be positive, got " + a.at("m"));
  return p;
}

bool t_eighth(const Args& a) {
  const std::string& t = a.at("t");
  if (t == "0") return false;
  if (t == "tau/8") return true;
  throw InvalidParams("t must be 0 or tau/8, got " + t);
}

}  // namespace

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names{"theta", "eta", "vartheta", "phi", "numerator"};
  return names;
}

const std::map<std::string, std::string>& function_defaults(const std::string& fn) {
  auto it = table().find(fn);
  if (it == table().end())
    throw InvalidParams("unknown function '" + fn + "' (valid: theta, eta, vartheta, phi, numerator)");
  return it->second;
}

FunctionSpec normalise(const FunctionSpec& spec) {
  FunctionSpec out{spec.fn, function_defaults(spec.fn)};
  for (const auto& [k, v] : spec.args) {
    auto it = out.args.find(k);
    if (it == out.args.end()) {
      std::string keys;
      for (const auto& [d, _] : out.args) keys += (keys.empty() ? "" : ", ") + d;
      throw InvalidParams(spec.fn + " takes no argument '" + k + "' (valid: " + keys + ")");
    }
    bool word = std::find(WORDS.begin(), WORDS.end(), k) != WORDS.end();
    it->second = word ? v : ExpRational::parse(v).str();
  }
  const Args& a = out.args;
  // touch everything once so bad values fail before any work
  if (spec.fn == "theta") {
    positive(a, "K");
    if (R(a, "level").sign() <= 0) throw InvalidParams("level must be positive, got " + a.at("level"));
    parse_sign_variant(a.at("sign"));
  } else if (spec.fn == "eta") {
    positive(a, "k");
  } else if (spec.fn == "vartheta") {
    positive(a, "K");
    parse_vartheta_kind(a.at("kind"));
  } else if (spec.fn == "phi") {
    positive(a, "K");
    phi_params(a);
    t_eighth(a);
  } else {
    positive(a, "m");
    L(a, "p");
  }
  return out;
}

QXSeries expand_function(const FunctionSpec& in, const ExpRational& trunc) {
  const FunctionSpec spec = normalise(in);
  const Args& a = spec.args;
  if (spec.fn == "theta") {
    ThetaSpec t{R(a, "j"), R(a, "level"), parse_sign_variant(a.at("sign")), L(a, "K"), affine(a, "")};
    return theta(t, trunc);
  }
  if (spec.fn == "eta") return eta(L(a, "k"), trunc);
  if (spec.fn == "vartheta") return vartheta(parse_vartheta_kind(a.at("kind")), L(a, "K"), affine(a, ""), trunc);
  if (spec.fn == "phi")
    return phi_symbolic(phi_params(a), L(a, "K"), affine(a, "1"), affine(a, "2"),
                        t_eighth(a) ? TMode::tau_over_8 : TMode::zero, trunc);
  return numerator(L(a, "m"), R(a, "s"), trunc, L(a, "p"));
}

std::complex<double> evaluate_function(const FunctionSpec& in, std::complex<double> tau, std::complex<double> z) {
  const FunctionSpec spec = normalise(in);
  const Args& a = spec.args;
  if (spec.fn == "theta") {
    double K = double(L(a, "K"));
    return numeric::theta(R(a, "j").to_double(), R(a, "level").to_double(), K * tau, at(affine(a, ""), tau, z),
                          parse_sign_variant(a.at("sign")));
  }
  if (spec.fn == "eta") return numeric::eta(double(L(a, "k")) * tau);
  if (spec.fn == "vartheta")
    return numeric::vartheta(parse_vartheta_kind(a.at("kind")), double(L(a, "K")) * tau, at(affine(a, ""), tau, z));
  if (spec.fn == "phi") {
    NumericPoint pt{double(L(a, "K")) * tau, at(affine(a, "1"), tau, z), at(affine(a, "2"), tau, z)};
    if (t_eighth(a)) pt.t = tau / 8.0;
    return phi_numeric(phi_params(a), pt);
  }
  const long p = L(a, "p");
  PhiParams pp;
  pp.m = ExpRational(L(a, "m"), 2);
  pp.s = R(a, "s");
  return phi_numeric(pp, {2.0 * tau, at(numerator_arg1(p), tau, z), at(numerator_arg2(p), tau, z), tau / 8.0});
}

}  // namespace mockforms
