#include "qhgr/textio.hpp"

#include "json.hpp"

#include <charconv>
#include <sstream>

namespace qhgr {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::string join(const std::vector<i64>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

std::vector<i64> parse_int_list(const std::string& text, const char* what) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        piece = strip(piece);
        i64 value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size()) fail(what);
        out.push_back(value);
    }
    return out;
}

Partition parse_shape(const std::string& text) {
    std::string s = strip(text);
    if (s.empty() || s == "0" || s == "empty") return {};
    Partition p = trim(parse_int_list(s, "shape: expected comma-separated parts"));
    require_partition(p);
    return p;
}

std::string shape_to_text(const Partition& shape) {
    return shape.empty() ? "0" : join(shape);
}

Word parse_word(i64 n, const std::string& text) {
    std::string s = strip(text);
    std::vector<i64> letters = s.empty() ? std::vector<i64>{}
                                         : parse_int_list(s, "word: expected comma-separated letters");
    for (i64 t : letters)
        require(0 <= t && t < n, "word: letter out of range");
    return Word{n, letters};
}

std::string word_to_text(const Word& word) { return join(word.letters); }

std::string window_to_text(const AffinePermutation& w) { return join(w.window()); }

std::string qclass_to_text(const QClass& x) {
    if (x.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : x.terms) {
        const auto& [d, shape] = key;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        i64 mag = c < 0 ? -c : c;
        std::vector<std::string> pieces;
        if (mag != 1 || (d == 0 && shape.empty())) pieces.push_back(std::to_string(mag));
        if (d == 1)
            pieces.push_back("q");
        else if (d != 0)
            pieces.push_back("q^" + std::to_string(d));
        if (!shape.empty()) pieces.push_back("s[" + join(shape) + "]");
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) out += "*";
            out += pieces[i];
        }
    }
    return out;
}

std::string qclass_to_json(const QClass& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : x.terms)
        terms.push_back({{"shape", key.second}, {"qdeg", key.first}, {"coeff", c}});
    return terms.dump();
}

QClass qclass_from_json(i64 m, i64 n, const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    require(doc.is_array(), "class json: expected a list of terms");
    QClass out = qc_zero(m, n);
    for (const auto& rec : doc) {
        Partition shape = rec.at("shape").get<Partition>();
        out = qc_add(out, qc_class(m, n, shape, rec.at("qdeg").get<i64>(),
                                   rec.at("coeff").get<i64>()));
    }
    return out;
}

std::string kschur_factored(i64 n, const Partition& lam) {
    require_partition(lam);
    Partition rest = lam;
    std::vector<i64> factors;
    while (!rest.empty()) {
        Partition tail(rest.begin() + 1, rest.end());
        if (weak_pieri(n, rest[0], tail) != std::vector<Partition>{rest}) break;
        factors.push_back(rest[0]);
        rest = tail;
    }
    HPolynomial remainder = kschur_h_poly(n, rest);
    std::string rem = hp_to_string(remainder);
    if (factors.empty()) return rem;
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += "h" + std::to_string(factors[i]);
    }
    if (rest.empty()) return out;  // remainder is the constant 1
    bool atomic = remainder.terms.size() == 1 && remainder.terms.begin()->second == 1;
    return out + "*" + (atomic ? rem : "(" + rem + ")");
}

}  // namespace qhgr
