#include "cakecut/group.hpp"

#include <stdexcept>

namespace cakecut {

namespace {

constexpr const char* kModp2048 =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD1"
    "29024E088A67CC74020BBEA63B139B22514A08798E3404DD"
    "EF9519B3CD3A431B302B0A6DF25F14374FE1356D6D51C245"
    "E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3D"
    "C2007CB8A163BF0598DA48361C55D39A69163FA8FD24CF5F"
    "83655D23DCA3AD961C62F356208552BB9ED529077096966D"
    "670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9"
    "DE2BCBF6955817183995497CEA956AE515D2261898FA0510"
    "15728E5A8AACAA68FFFFFFFFFFFFFFFF";

}  // namespace

GroupParams GroupParams::test_group() { return GroupParams{"test", 23, 11, 2}; }

GroupParams GroupParams::modp2048() {
  GroupParams gp;
  gp.name = "modp2048";
  gp.p = BigInt(kModp2048, 16);
  gp.q = (gp.p - 1) / 2;
  gp.g = 4;
  return gp;
}

GroupParams GroupParams::named(std::string_view name) {
  if (name == "test") return test_group();
  if (name == "modp2048") return modp2048();
  throw std::invalid_argument("unknown group \"" + std::string(name) + "\"");
}

void GroupParams::validate() const {
  if (p != 2 * q + 1) throw std::invalid_argument("p must equal 2q + 1");
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("p and q must be prime");
  }
  if (g <= 1 || g >= p || !is_element(g)) throw std::invalid_argument("g must have order q");
}

std::size_t GroupParams::element_hex_width() const {
  return 2 * ((mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8);
}

std::size_t GroupParams::scalar_hex_width() const {
  return 2 * ((mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8);
}

Element GroupParams::mul(const Element& a, const Element& b) const {
  Element out = a * b;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), p.get_mpz_t());
  return out;
}

Element GroupParams::pow(const Element& base, const Scalar& exponent) const {
  Element out;
  Scalar e = reduce(exponent);
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out;
}

Element GroupParams::inv(const Element& a) const {
  Element out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw std::domain_error("element not invertible");
  }
  return out;
}

Scalar GroupParams::reduce(const BigInt& v) const {
  Scalar out;
  mpz_mod(out.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return out;
}

bool GroupParams::is_element(const BigInt& x) const {
  if (x <= 0 || x >= p) return false;
  return mpz_jacobi(x.get_mpz_t(), p.get_mpz_t()) == 1;
}

std::string to_hex(const BigInt& v, std::size_t width) {
  if (sgn(v) < 0) throw std::invalid_argument("cannot hex-encode a negative value");
  std::string digits = v.get_str(16);
  if (digits.size() > width) throw std::invalid_argument("value too wide for hex field");
  return std::string(width - digits.size(), '0') + digits;
}

BigInt from_hex(std::string_view text, std::size_t width) {
  if (text.size() != width) throw std::invalid_argument("hex field has wrong width");
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) throw std::invalid_argument("hex field has non-canonical digit");
  }
  return BigInt(std::string(text), 16);
}

}  // namespace cakecut
