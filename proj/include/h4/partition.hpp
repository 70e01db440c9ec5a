#pragma once

#include <optional>
#include <string>
#include <vector>

namespace h4 {

// Integer partition: weakly decreasing positive parts; the empty partition
// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    static Partition parse(const std::string& s);  // "[4,2,1]" or "[4^1,2^1,1^1]"

    const std::vector<long>& parts() const { return parts_; }
    long weight() const;
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long part(size_t k) const { return parts_.at(k); }  // 0-based

    // run-length view: (value, multiplicity) pairs, values decreasing
    std::vector<std::pair<long, long>> runs() const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<long> parts_;
};

// all partitions of n in reverse lexicographic order ([n] first, [1^n] last)
std::vector<Partition> enumerate_partitions(long n);

// subpartitions of lambda with exactly m parts, each at most max_part
// (distinct results, respecting multiplicities of lambda)
std::vector<Partition> bounded_subpartitions(const Partition& lambda, long m, long max_part);

// lambda minus mu, respecting multiplicities; throws if mu is not a
// subpartition of lambda
Partition remove_parts(const Partition& lambda, const Partition& mu);

// lambda with n included as an additional part
Partition insert_part(const Partition& lambda, long n);

// mu with n added to its k-th part (1-based position in the sorted sequence)
Partition bump(const Partition& mu, size_t k, long n);

// mu with n subtracted from its k-th part; requires mu_k > n, rejecting the
// mu_k = n case (it never arises in the constraint recursion)
std::optional<Partition> unbump(const Partition& mu, size_t k, long n);

// number of parts of nu equal to n
long multiplicity(long n, const Partition& nu);

bool is_subpartition(const Partition& mu, const Partition& lambda);

}  // namespace h4
