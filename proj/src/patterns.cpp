#include "rv/patterns.hpp"

#include <json.hpp>
#include <stdexcept>

namespace rv {

bool is_valid_pattern(const Pattern& w) {
    if (w.empty()) return false;
    char max_seen = 'A' - 1;
    for (char c : w) {
        if (c < 'A' || c > 'F') return false;
        if (c > max_seen + 1) return false;  // first occurrences must be in order
        if (c == max_seen + 1) max_seen = c;
    }
    return true;
}

int distinct_letters(const Pattern& w) {
    char max_seen = 'A' - 1;
    for (char c : w)
        if (c > max_seen) max_seen = c;
    return max_seen - 'A' + 1;
}

Pattern canonical_pattern(const std::vector<int>& ids) {
    Pattern w;
    std::map<int, char> seen;
    for (int id : ids) {
        auto [it, inserted] = seen.emplace(id, static_cast<char>('A' + seen.size()));
        w += it->second;
    }
    return w;
}

static void extend(Pattern& w, int k, int max_used, std::vector<Pattern>& out) {
    if (static_cast<int>(w.size()) == k) {
        out.push_back(w);
        return;
    }
    for (int v = 0; v <= max_used + 1 && v < 6; ++v) {
        w += static_cast<char>('A' + v);
        extend(w, k, std::max(max_used, v), out);
        w.pop_back();
    }
}

std::vector<Pattern> enumerate_patterns(int k) {
    if (k < 1) throw std::invalid_argument("pattern length must be >= 1");
    std::vector<Pattern> out;
    Pattern w;
    extend(w, k, -1, out);
    return out;
}

long realization_count(const Pattern& w) {
    if (!is_valid_pattern(w)) throw std::invalid_argument("not a restricted-growth string: " + w);
    int m = distinct_letters(w);
    if (m > 6) throw std::invalid_argument("more distinct tours than exist on K4");
    long r = 1;
    for (int i = 0; i < m; ++i) r *= 6 - i;
    return r;
}

std::vector<Rational> PatternDistribution::as_vector() const {
    std::vector<Rational> v;
    for (const auto& w : enumerate_patterns(length)) v.push_back(prob(w));
    return v;
}

void PatternDistribution::validate() const {
    Rational total(0);
    for (const auto& [w, q] : probs) {
        if (!is_valid_pattern(w) || static_cast<int>(w.size()) != length)
            throw std::invalid_argument("bad pattern key: " + w);
        if (sgn(q) < 0) throw std::invalid_argument("negative pattern mass at " + w);
        total += q;
    }
    if (total != 1) throw std::invalid_argument("pattern masses must sum to 1");
}

PatternDistribution uniform_pattern_distribution(int k) {
    PatternDistribution dist;
    dist.length = k;
    for (const auto& w : enumerate_patterns(k)) {
        // P(pattern) = realizations / 6^k under i.i.d. uniform tours.
        Rational q(realization_count(w));
        for (int i = 0; i < k; ++i) q /= 6;
        dist.probs[w] = q;
    }
    dist.validate();
    return dist;
}

PatternDistribution paper_y_distribution() {
    PatternDistribution dist;
    dist.length = 4;
    for (const auto& w : {"AAAB", "AABA", "ABAA", "ABBB"}) dist.probs[w] = rat(1, 12);
    dist.probs["ABCD"] = rat(2, 3);
    dist.validate();
    return dist;
}

PatternDistribution prefix_marginal(const PatternDistribution& dist, int t) {
    if (t < 1 || t > dist.length) throw std::invalid_argument("prefix length out of range");
    PatternDistribution out;
    out.length = t;
    for (const auto& [w, q] : dist.probs) {
        if (q == 0) continue;
        out.probs[w.substr(0, t)] += q;  // a prefix of an RGS is already canonical
    }
    out.validate();
    return out;
}

PatternDistribution pattern_distribution_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    PatternDistribution dist;
    dist.length = j.at("length").get<int>();
    for (const auto& [w, v] : j.at("probs").items())
        dist.probs[w] = rat_from_string(v.get<std::string>());
    dist.validate();
    return dist;
}

std::string pattern_distribution_to_json(const PatternDistribution& dist) {
    nlohmann::json probs = nlohmann::json::object();
    for (const auto& [w, q] : dist.probs)
        if (q != 0) probs[w] = rat_to_string(q);
    return nlohmann::json{{"length", dist.length}, {"probs", probs}}.dump();
}

}  // namespace rv
