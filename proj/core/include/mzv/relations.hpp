#pragma once

#include <mzv/word_sum.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class Family { FDS, RDS_IV, RDS_V, DERIV, OHNO, OHNO_STAR };
using FamilySet = std::set<Family>;

std::string_view family_name(Family f);
Family parse_family(std::string_view name); // accepts "RDS_IV" or "rds_iv"; throws ParseError
FamilySet parse_families(std::string_view list); // comma separated
std::string families_to_string(const FamilySet& fs);

struct RelationVector {
    int weight = 0;
    WordSum entries;        // admissible words of `weight`
    std::string provenance; // e.g. "RDS_IV w1=y w0=xy"
};

// Throws BadRange unless the support is admissible and of the stated weight.
RelationVector make_relation(int weight, WordSum entries, std::string provenance = {});

// All nonzero generators of a family at one weight.
std::vector<RelationVector> gen_family(int weight, Family family);

struct MembershipCertificate {
    bool member = false;
    std::map<std::size_t, Rational> combination; // generator id -> coefficient
    WordSum residue;                             // reduced candidate when not a member
};

class RelationBasis {
public:
    struct Row {
        std::size_t pivot = 0;
        std::vector<std::pair<std::size_t, Rational>> entries; // sorted by column, pivot entry is 1
    };

    int weight() const { return weight_; }
    const FamilySet& families() const { return families_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t columns() const { return columns_.size(); }
    std::size_t quotient_dim() const { return columns_.size() - rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<Word>& column_words() const { return columns_; }
    const std::vector<RelationVector>& generators() const { return generators_; }
    std::size_t raw_generator_count() const { return raw_generators_; }

    WordSum row_as_sum(std::size_t r) const;
    MembershipCertificate membership(const RelationVector& candidate) const; // throws WeightMismatch
    WordSum combine(const std::map<std::size_t, Rational>& combination) const;

    friend RelationBasis build_basis(int weight, const FamilySet& families);

private:
    using Sparse = std::map<std::size_t, Rational>;
    Sparse to_sparse(const WordSum& v) const;
    void reduce(Sparse& v) const;
    bool insert(Sparse v);
    struct Tracked;
    const Tracked& tracked() const;

    int weight_ = 0;
    FamilySet families_;
    std::vector<Word> columns_;
    std::vector<RelationVector> generators_;   // deduplicated, in generation order
    std::size_t raw_generators_ = 0;
    std::vector<Row> rows_;                    // sorted by pivot
    std::vector<std::size_t> row_of_pivot_;    // column -> row index, npos if none
    std::vector<std::size_t> pivot_generators_; // generator ids that raised the rank
    mutable std::shared_ptr<std::once_flag> tracked_once_ = std::make_shared<std::once_flag>();
    mutable std::shared_ptr<const Tracked> tracked_;
};

RelationBasis build_basis(int weight, const FamilySet& families); // throws BadRange above the weight cap
std::size_t quotient_dim(int weight, const FamilySet& families);

struct RankReport {
    int weight = 0;
    FamilySet families;
    std::size_t generators = 0;
    std::size_t rank = 0;
    std::size_t quotient_dim = 0;
    unsigned long long d_k = 0;
    bool match = false;
};

RankReport rank_report(int weight, const FamilySet& families);

} // namespace mzv
