#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bare {

/*
 * Phase-free n-qubit Pauli operator stored as paired X/Z bit vectors,
 * word-packed so products and inner products are word-parallel.
 * Qubit q carries X iff x[q]=1,z[q]=0; Z iff 0,1; Y iff 1,1; I iff 0,0.
 * Phases are discarded everywhere: syndromes, decoding and classification
 * depend only on the symplectic data.
 */
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(int n);

    static PauliString identity(int n) { return PauliString(n); }
    static PauliString single(int n, int qubit, char pauli);

    // Text form: fixed-length uppercase string over {I,X,Y,Z}, qubit 0 leftmost.
    static PauliString parse(const std::string& text);
    static PauliString parse(const std::string& text, int expected_qubits);
    std::string str() const;

    int num_qubits() const { return n_; }
    bool is_identity() const;
    int weight() const;

    char pauli_at(int qubit) const;
    void set_pauli(int qubit, char pauli);
    bool x_bit(int qubit) const;
    bool z_bit(int qubit) const;

    // Componentwise XOR of x and z vectors (phase discarded); self-inverse.
    void mul_inplace(const PauliString& other);
    PauliString operator*(const PauliString& other) const;

    std::span<const uint64_t> x_words() const { return x_; }
    std::span<const uint64_t> z_words() const { return z_; }

    bool operator==(const PauliString& other) const = default;
    bool operator<(const PauliString& other) const { return str() < other.str(); }

  private:
    int n_ = 0;
    std::vector<uint64_t> x_, z_;

    void check_qubit(int qubit) const;
    friend int symplectic_product(const PauliString&, const PauliString&);
};

// (a.x . b.z + a.z . b.x) mod 2; 0 iff a and b commute.
int symplectic_product(const PauliString& a, const PauliString& b);

bool anticommutes_at(const PauliString& p, int qubit, char pauli);

}  // namespace bare
