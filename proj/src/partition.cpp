#include "h4/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace h4 {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<long>());
    for (long p : parts_)
        if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
}

Partition Partition::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') body = body.substr(1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    std::vector<long> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto caret = tok.find('^');
        long value = std::stol(tok.substr(0, caret));
        long mult = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
        for (long r = 0; r < mult; ++r) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<std::pair<long, long>> Partition::runs() const {
    std::vector<std::pair<long, long>> out;
    for (long p : parts_) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ",";
        os << parts_[k];
    }
    os << "]";
    return os.str();
}

bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

std::vector<Partition> enumerate_partitions(long n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (long p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> bounded_subpartitions(const Partition& lambda, long m, long max_part) {
    std::set<Partition> out;
    auto rs = lambda.runs();
    std::vector<long> cur;
    std::function<void(size_t, long)> rec = [&](size_t run, long left) {
        if (left == 0) {
            out.insert(Partition(cur));
            return;
        }
        if (run == rs.size()) return;
        auto [value, mult] = rs[run];
        long take_max = value <= max_part ? std::min(mult, left) : 0;
        for (long take = take_max; take >= 0; --take) {
            for (long r = 0; r < take; ++r) cur.push_back(value);
            rec(run + 1, left - take);
            for (long r = 0; r < take; ++r) cur.pop_back();
        }
    };
    rec(0, m);
    return std::vector<Partition>(out.begin(), out.end());
}

Partition remove_parts(const Partition& lambda, const Partition& mu) {
    std::map<long, long> counts;
    for (long p : lambda.parts()) ++counts[p];
    for (long p : mu.parts()) {
        auto it = counts.find(p);
        if (it == counts.end() || it->second == 0)
            throw std::invalid_argument("remove_parts: " + mu.str() + " is not a subpartition of " +
                                        lambda.str());
        --it->second;
    }
    std::vector<long> parts;
    for (auto [value, mult] : counts)
        for (long r = 0; r < mult; ++r) parts.push_back(value);
    return Partition(std::move(parts));
}

Partition insert_part(const Partition& lambda, long n) {
    std::vector<long> parts = lambda.parts();
    parts.push_back(n);
    return Partition(std::move(parts));
}

Partition bump(const Partition& mu, size_t k, long n) {
    if (k < 1 || k > mu.length()) throw std::out_of_range("bump: bad part index");
    std::vector<long> parts = mu.parts();
    parts[k - 1] += n;
    return Partition(std::move(parts));
}

std::optional<Partition> unbump(const Partition& mu, size_t k, long n) {
    if (k < 1 || k > mu.length()) throw std::out_of_range("unbump: bad part index");
    if (mu.part(k - 1) <= n) return std::nullopt;
    std::vector<long> parts = mu.parts();
    parts[k - 1] -= n;
    return Partition(std::move(parts));
}

long multiplicity(long n, const Partition& nu) {
    long m = 0;
    for (long p : nu.parts()) m += (p == n);
    return m;
}

bool is_subpartition(const Partition& mu, const Partition& lambda) {
    std::map<long, long> counts;
    for (long p : lambda.parts()) ++counts[p];
    for (long p : mu.parts()) {
        auto it = counts.find(p);
        if (it == counts.end() || it->second == 0) return false;
        --it->second;
    }
    return true;
}

}  // namespace h4
