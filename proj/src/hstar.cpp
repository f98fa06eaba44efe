#include "hstar.hpp"

#include <sstream>

#include "errors.hpp"

namespace trilength {

QREncoding qr_encode(const Address& a) {
    QREncoding e;
    uint32_t run = 0;
    for (Label l : a) {
        if (l == Label::Fwd) {
            ++run;
        } else {
            e.q.push_back(run);
            e.rho.push_back(l == Label::Right ? 1 : 0);
            run = 0;
        }
    }
    e.q.push_back(run);
    return e;
}

Address qr_decode(const std::vector<uint32_t>& q, const std::vector<uint8_t>& rho,
                  uint32_t m) {
    if (rho.size() != m)
        throw_parse("rho has " + std::to_string(rho.size()) + " entries, expected m=" +
                    std::to_string(m));
    if (q.size() != static_cast<size_t>(m) + 1)
        throw_parse("q has " + std::to_string(q.size()) + " entries, expected m+1=" +
                    std::to_string(m + 1));
    for (uint8_t r : rho)
        if (r > 1) throw_parse("rho entries must be 0 or 1");
    Address a;
    for (uint32_t i = 0; i < m; ++i) {
        a.insert(a.end(), q[i], Label::Fwd);
        a.push_back(rho[i] ? Label::Right : Label::Left);
    }
    a.insert(a.end(), q[m], Label::Fwd);
    return a;
}

int ty(const Address& a) {
    int t = 0;
    uint32_t run = 0;
    for (Label l : a) {
        switch (l) {
            case Label::Fwd: ++run; break;
            case Label::Left:
                t ^= static_cast<int>(run & 1);
                run = 0;
                break;
            case Label::Right:
                t ^= static_cast<int>(run & 1) ^ 1;
                run = 0;
                break;
        }
    }
    return t;
}

int ty_from_encoding(const QREncoding& e) {
    int t = 0;
    for (size_t i = 0; i < e.rho.size(); ++i)
        t ^= static_cast<int>(e.q[i] & 1) ^ static_cast<int>(e.rho[i]);
    return t;
}

bool is_proper(const QREncoding& e) {
    uint32_t m = e.m();
    if (m == 0) return false;
    if (e.q.back() != 0) return false;
    return e.q[m - 1] > 0 || m == 1;
}

QREncoding proper_encoding(const CornerRef& ref) {
    // Rewrites (address, corner) until the vertex is named as the base corner
    // v0 of a node whose encoding is proper.  Each non-base corner is a base
    // corner one gluing step away:
    //   v2 of N       = v0 of N's Fwd child's Left child,
    //   v3 of N       = v0 of N's Fwd child's Right child,
    //   v0/v1 of N    = the corner of N's parent that N's base was glued to.
    // The appended Fwd,Left / Fwd,Right tails are proper by construction, and
    // the root's base corners are v0 of the Left and Right children.
    Address a = ref.address;
    Corner c = ref.corner;
    for (;;) {
        switch (c) {
            case Corner::V2:
                a.push_back(Label::Fwd);
                a.push_back(Label::Left);
                return qr_encode(a);
            case Corner::V3:
                a.push_back(Label::Fwd);
                a.push_back(Label::Right);
                return qr_encode(a);
            case Corner::V0: {
                if (a.empty()) return qr_encode({Label::Left});
                Label l = a.back();
                a.pop_back();
                c = (l == Label::Left) ? Corner::V0
                    : (l == Label::Fwd) ? Corner::V2
                                        : Corner::V1;
                break;
            }
            case Corner::V1: {
                if (a.empty()) return qr_encode({Label::Right});
                Label l = a.back();
                a.pop_back();
                c = (l == Label::Left) ? Corner::V2 : Corner::V3;
                break;
            }
        }
    }
}

Address parse_address(const std::string& text) {
    Address a;
    size_t pos = 0;
    bool expect_token = false;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        // Trim surrounding whitespace.
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        tok = (b == std::string::npos) ? "" : tok.substr(b, e - b + 1);

        if (tok.empty()) {
            if (expect_token || comma != std::string::npos)
                throw_parse("empty element in address '" + text + "'");
        } else if (tok == "F") {
            a.push_back(Label::Fwd);
        } else if (tok == "L") {
            a.push_back(Label::Left);
        } else if (tok == "R") {
            a.push_back(Label::Right);
        } else {
            throw_parse("invalid address element '" + tok + "' (expected F, L or R)");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
        expect_token = true;
    }
    return a;
}

std::string format_address(const Address& a) {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += (a[i] == Label::Fwd) ? 'F' : (a[i] == Label::Left) ? 'L' : 'R';
    }
    return out;
}

std::string format_encoding(const QREncoding& e) {
    std::ostringstream out;
    out << "q=(";
    for (size_t i = 0; i < e.q.size(); ++i) {
        if (i) out << ",";
        out << e.q[i];
    }
    out << ") rho=(";
    for (size_t i = 0; i < e.rho.size(); ++i) {
        if (i) out << ",";
        out << static_cast<int>(e.rho[i]);
    }
    out << ") m=" << e.m();
    return out.str();
}

} // namespace trilength
