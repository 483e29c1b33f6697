#include "sl3trop/arith.hpp"
#include "sl3trop/errors.hpp"

namespace sl3t {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::LengthMismatch: return "length mismatch";
    case ErrorKind::SelfFolded: return "self-folded triangle";
    case ErrorKind::BoundaryEdge: return "boundary edge";
    case ErrorKind::TopologyMismatch: return "topology mismatch";
    case ErrorKind::NotInCone: return "not in cone";
    case ErrorKind::NegativeCoefficient: return "negative coefficient";
    case ErrorKind::NonIntegral: return "non-integral solution";
    case ErrorKind::Singular: return "singular system";
    case ErrorKind::EdgeMismatch: return "edge mismatch";
    case ErrorKind::NotInVT: return "not in V_T";
    case ErrorKind::DecompositionFailure: return "decomposition failure";
    case ErrorKind::InvalidInput: return "invalid input";
  }
  return "unknown";
}

IntVec to_int_vec(const std::vector<std::int64_t>& v) {
  IntVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::vector<std::int64_t> to_i64_vec(const IntVec& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
      throw Error(ErrorKind::InvalidInput, "integer does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

std::string rat_to_string(const Rat& r) {
  auto n = boost::multiprecision::numerator(r);
  auto d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
    return Rat(n, d);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::InvalidInput, "bad rational '" + s + "'");
  }
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "add: length mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "sub: length mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec scale(const Int& k, const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

}  // namespace sl3t
