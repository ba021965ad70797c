#pragma once

#include <string>
#include <vector>

#include "bare/bit_matrix.hpp"
#include "bare/pauli.hpp"

namespace bare {

/*
 * Syndrome bit vector, one bit per generator. Bit j (leftmost in the text
 * form) is the commutation outcome with the j-th listed generator.
 * Dense lookup tables index syndromes by the packed value below.
 */
struct Syndrome {
    uint32_t bits = 0;
    int m = 0;

    bool zero() const { return bits == 0; }
    bool bit(int j) const { return (bits >> j) & 1; }
    uint32_t index() const { return bits; }

    std::string str() const;
    static Syndrome parse(const std::string& text);
    Syndrome operator^(const Syndrome& o) const { return {bits ^ o.bits, m}; }

    bool operator==(const Syndrome&) const = default;
    bool operator<(const Syndrome& o) const { return bits < o.bits; }
};

// Stacked [H_x | H_z] generator rows over GF(2).
struct CheckMatrix {
    int n = 0;  // qubit count (columns per block)
    int m = 0;  // generator count (rows)
    BitMatrix hx, hz;

    static CheckMatrix from_rows(const std::vector<PauliString>& rows);
    PauliString row(int i) const;
};

// hz . hx^T + hx . hz^T = 0 over GF(2): every row pair commutes.
bool check_symplectic_orthogonality(const CheckMatrix& h);

/*
 * Abelian group generated by a list of independent commuting Paulis,
 * with a row-reduced basis cached for phase-free membership tests.
 * Immutable after construction.
 */
class StabilizerGroup {
  public:
    StabilizerGroup() = default;
    explicit StabilizerGroup(std::vector<PauliString> generators);

    int num_qubits() const { return n_; }
    int num_generators() const { return static_cast<int>(generators_.size()); }
    const std::vector<PauliString>& generators() const { return generators_; }
    const PauliString& generator(int i) const { return generators_[i]; }

    Syndrome syndrome_of(const PauliString& e) const;

    // True iff p's symplectic vector lies in the GF(2) row space of the
    // generators (membership up to phase).
    bool contains(const PauliString& p) const;

  private:
    int n_ = 0;
    std::vector<PauliString> generators_;
    BitMatrix basis_;  // row-reduced m x 2n
};

}  // namespace bare
