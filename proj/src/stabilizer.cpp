#include "bare/stabilizer.hpp"

#include <stdexcept>

namespace bare {

std::string Syndrome::str() const {
    std::string s(m, '0');
    for (int j = 0; j < m; ++j)
        if (bit(j)) s[j] = '1';
    return s;
}

Syndrome Syndrome::parse(const std::string& text) {
    if (text.size() > 32) throw std::invalid_argument("syndrome too long");
    Syndrome s{0, static_cast<int>(text.size())};
    for (size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '1')
            s.bits |= uint32_t{1} << j;
        else if (text[j] != '0')
            throw std::invalid_argument("bad syndrome character");
    }
    return s;
}

CheckMatrix CheckMatrix::from_rows(const std::vector<PauliString>& rows) {
    if (rows.empty()) return {};
    CheckMatrix h;
    h.n = rows[0].num_qubits();
    h.m = static_cast<int>(rows.size());
    h.hx = BitMatrix(h.m, h.n);
    h.hz = BitMatrix(h.m, h.n);
    for (int i = 0; i < h.m; ++i) {
        if (rows[i].num_qubits() != h.n) throw std::invalid_argument("ragged generator list");
        for (int q = 0; q < h.n; ++q) {
            h.hx.set(i, q, rows[i].x_bit(q));
            h.hz.set(i, q, rows[i].z_bit(q));
        }
    }
    return h;
}

PauliString CheckMatrix::row(int i) const {
    PauliString p(n);
    for (int q = 0; q < n; ++q) {
        bool x = hx.get(i, q), z = hz.get(i, q);
        if (x || z) p.set_pauli(q, x ? (z ? 'Y' : 'X') : 'Z');
    }
    return p;
}

bool check_symplectic_orthogonality(const CheckMatrix& h) {
    for (int i = 0; i < h.m; ++i) {
        PauliString ri = h.row(i);
        for (int j = i; j < h.m; ++j) {
            if (symplectic_product(ri, h.row(j)) != 0) return false;
        }
    }
    return true;
}

namespace {
// Pauli as a packed [x | z] row of width 2n bits.
std::vector<uint64_t> symplectic_row(const PauliString& p) {
    int n = p.num_qubits();
    int wpr = (2 * n + 63) / 64;
    std::vector<uint64_t> v(wpr, 0);
    for (int q = 0; q < n; ++q) {
        if (p.x_bit(q)) v[q / 64] |= uint64_t{1} << (q % 64);
        if (p.z_bit(q)) {
            int c = n + q;
            v[c / 64] |= uint64_t{1} << (c % 64);
        }
    }
    return v;
}
}  // namespace

StabilizerGroup::StabilizerGroup(std::vector<PauliString> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("empty generator list");
    n_ = generators_[0].num_qubits();
    if (static_cast<size_t>(n_) > 0 && generators_.size() > 32)
        throw std::invalid_argument("more than 32 generators unsupported");
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].num_qubits() != n_) throw std::invalid_argument("ragged generator list");
        for (size_t j = i + 1; j < generators_.size(); ++j) {
            if (symplectic_product(generators_[i], generators_[j]) != 0)
                throw std::invalid_argument("generators must mutually commute");
        }
    }
    basis_ = BitMatrix(static_cast<int>(generators_.size()), 2 * n_);
    for (size_t i = 0; i < generators_.size(); ++i) {
        auto v = symplectic_row(generators_[i]);
        for (int w = 0; w < basis_.words_per_row(); ++w) basis_.row(static_cast<int>(i))[w] = v[w];
    }
    if (basis_.row_reduce() != static_cast<int>(generators_.size()))
        throw std::invalid_argument("generators must be independent");
}

Syndrome StabilizerGroup::syndrome_of(const PauliString& e) const {
    if (e.num_qubits() != n_) throw std::invalid_argument("Pauli length mismatch");
    Syndrome s{0, num_generators()};
    for (int j = 0; j < num_generators(); ++j)
        if (symplectic_product(generators_[j], e)) s.bits |= uint32_t{1} << j;
    return s;
}

bool StabilizerGroup::contains(const PauliString& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("Pauli length mismatch");
    return basis_.in_row_space(symplectic_row(p));
}

}  // namespace bare
