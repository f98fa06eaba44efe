#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trilength {

/// Arc labels of the infinite trinary tree of rhombus copies.  Each node's
/// three outgoing arcs sit over the rhombus edges v0v2 (Left), v2v3 (Fwd)
/// and v1v3 (Right); the child glues its base edge v0v1 onto that edge.
enum class Label : uint8_t { Fwd, Left, Right };

/// Arc-label sequence from the root; the empty address is the root itself.
using Address = std::vector<Label>;

/// Corners of one rhombus copy: base v0, v1 and far corners v2, v3.
enum class Corner : uint8_t { V0, V1, V2, V3 };

/// A tree vertex named as "corner c of the node at this address".
struct CornerRef {
    Address address;
    Corner corner = Corner::V0;
};

/// Run-length form of an address.  With m turns (non-Fwd labels), q has m+1
/// entries: q[i] counts the Fwd steps between turn i and turn i+1 (before the
/// first turn for q[0], after the last for q[m]).  rho[i] is 0 for a Left
/// turn, 1 for a Right turn.
struct QREncoding {
    std::vector<uint32_t> q;
    std::vector<uint8_t> rho;

    uint32_t m() const { return static_cast<uint32_t>(rho.size()); }

    friend bool operator==(const QREncoding&, const QREncoding&) = default;
    friend bool operator<(const QREncoding& a, const QREncoding& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.rho < b.rho;
    }
};

QREncoding qr_encode(const Address& a);

/// Inverse of qr_encode.  m is passed explicitly and must satisfy
/// |q| == m+1 and |rho| == m; any mismatch is rejected.
Address qr_decode(const std::vector<uint32_t>& q, const std::vector<uint8_t>& rho,
                  uint32_t m);

/// Anchor-type parity of the node at address a (root has ty 0).  Computed in
/// one pass with a run counter f of Fwd steps since the last turn: a turn
/// with parity bit rho flips ty by (f mod 2) xor rho; Fwd steps flip nothing.
int ty(const Address& a);

/// The same parity from the run-length form: ty_i = ty_{i-1} xor q_i xor
/// rho_i folded over the turns.  Kept as a separate implementation so the
/// two can cross-check each other in tests.
int ty_from_encoding(const QREncoding& e);

/// True iff e is the canonical encoding of its base vertex: no trailing Fwd
/// steps (q[m] == 0) and, unless m == 1, at least one Fwd step before the
/// final turn (q[m-1] > 0).
bool is_proper(const QREncoding& e);

/// The unique proper encoding of the tree vertex that ref denotes.  Distinct
/// corner references naming the same vertex (a shared corner of neighbouring
/// rhombi) yield the same result.
QREncoding proper_encoding(const CornerRef& ref);

/// Text forms: "L,F,L,L" (empty string = root).
Address parse_address(const std::string& text);
std::string format_address(const Address& a);
std::string format_encoding(const QREncoding& e);

} // namespace trilength
