#include "bare/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace bare {

namespace {
int words_for(int n) { return (n + 63) / 64; }
}  // namespace

PauliString::PauliString(int n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {
    if (n < 0) throw std::invalid_argument("qubit count must be nonnegative");
}

PauliString PauliString::single(int n, int qubit, char pauli) {
    PauliString p(n);
    p.set_pauli(qubit, pauli);
    return p;
}

PauliString PauliString::parse(const std::string& text) {
    PauliString p(static_cast<int>(text.size()));
    for (int q = 0; q < p.n_; ++q) p.set_pauli(q, text[q]);
    return p;
}

PauliString PauliString::parse(const std::string& text, int expected_qubits) {
    if (static_cast<int>(text.size()) != expected_qubits)
        throw std::invalid_argument("Pauli text has wrong length");
    return parse(text);
}

std::string PauliString::str() const {
    std::string s(n_, 'I');
    for (int q = 0; q < n_; ++q) s[q] = pauli_at(q);
    return s;
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < x_.size(); ++w)
        if (x_[w] | z_[w]) return false;
    return true;
}

int PauliString::weight() const {
    int w = 0;
    for (size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
    return w;
}

void PauliString::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_) throw std::out_of_range("qubit index out of range");
}

char PauliString::pauli_at(int qubit) const {
    check_qubit(qubit);
    int code = (x_bit(qubit) ? 1 : 0) | (z_bit(qubit) ? 2 : 0);
    return "IXZY"[code];
}

void PauliString::set_pauli(int qubit, char pauli) {
    check_qubit(qubit);
    uint64_t mask = uint64_t{1} << (qubit % 64);
    uint64_t xb = 0, zb = 0;
    switch (pauli) {
        case 'I': break;
        case 'X': xb = mask; break;
        case 'Z': zb = mask; break;
        case 'Y': xb = mask; zb = mask; break;
        default: throw std::invalid_argument(std::string("bad Pauli character: ") + pauli);
    }
    x_[qubit / 64] = (x_[qubit / 64] & ~mask) | xb;
    z_[qubit / 64] = (z_[qubit / 64] & ~mask) | zb;
}

bool PauliString::x_bit(int qubit) const { return (x_[qubit / 64] >> (qubit % 64)) & 1; }
bool PauliString::z_bit(int qubit) const { return (z_[qubit / 64] >> (qubit % 64)) & 1; }

void PauliString::mul_inplace(const PauliString& other) {
    if (other.n_ != n_) throw std::invalid_argument("Pauli length mismatch");
    for (size_t w = 0; w < x_.size(); ++w) {
        x_[w] ^= other.x_[w];
        z_[w] ^= other.z_[w];
    }
}

PauliString PauliString::operator*(const PauliString& other) const {
    PauliString out = *this;
    out.mul_inplace(other);
    return out;
}

int symplectic_product(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Pauli length mismatch");
    uint64_t acc = 0;
    for (size_t w = 0; w < a.x_.size(); ++w)
        acc ^= static_cast<uint64_t>(std::popcount(a.x_[w] & b.z_[w]) ^ std::popcount(a.z_[w] & b.x_[w]));
    return static_cast<int>(acc & 1);
}

bool anticommutes_at(const PauliString& p, int qubit, char pauli) {
    bool px = pauli == 'X' || pauli == 'Y';
    bool pz = pauli == 'Z' || pauli == 'Y';
    return (p.x_bit(qubit) && pz) ^ (p.z_bit(qubit) && px);
}

}  // namespace bare
