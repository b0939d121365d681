#ifndef FW_REWRITE_HH
#define FW_REWRITE_HH

#include <fw/expr.hh>

#include <string>
#include <utility>

namespace fw
{
    class RuleNotApplicable : public DomainError
    {
        public:
            using DomainError::DomainError;
    };

    // Counters filled in by the fuse-shifting stages. `bound_violations`
    // counts fuse nodes that needed more than height + k rule applications.
    struct RewriteStats
    {
        int fuses_processed = 0;
        int rule_applications = 0;
        int bound_violations = 0;
        int subdivisions = 0;
    };

    // Node-count constants for the size guarantees:
    //   reduced glue      <= glue_size_constant  * k^2 * (m + n)
    //   normalized multi  <= multi_size_constant * k^2 * n
    constexpr int glue_size_constant = 8;
    constexpr int multi_size_constant = 8;

    auto suppress_useless(const Expression & e) -> Expression;

    // Rules 1..11 are anchored at the fuse node, 12 at the relabel above an
    // introduce, 13 and 14 at the join.
    auto apply_rule(const Expression & e, int node, int rule) -> Expression;

    auto shift_fuses_to_unions(const Expression & e, RewriteStats * stats = nullptr) -> Expression;
    auto localize_fuses(const Expression & e, RewriteStats * stats = nullptr) -> Expression;
    auto fuse_to_glue(const Expression & e, RewriteStats * stats = nullptr) -> Expression;
    auto reduce_glue(const Expression & e) -> Expression;
    auto fuse_to_reduced_glue(const Expression & e, RewriteStats * stats = nullptr) -> Expression;
    auto fuse_to_multi(const Expression & e) -> Expression;
    auto normalize_multi(const Expression & e) -> Expression;

    // Read a clique or fuse-free expression as a multi expression.
    auto as_multi(const Expression & e) -> Expression;

    // Structural checks, each returns an empty string when satisfied.
    auto check_shifted(const Expression & e) -> std::string;
    auto check_localized(const Expression & e) -> std::string;
    auto check_reduced(const Expression & e) -> std::string;
    auto check_normalized_multi(const Expression & e) -> std::string;

    // Reduced glue expression over k+2 labels whose root join creates only
    // the edge {u, v}.
    auto pin_edge_expression(const Expression & e, const std::string & u, const std::string & v) -> Expression;

    auto glue_size_bound(int k, int n, int m) -> long long;
    auto multi_size_bound(int k, int n) -> long long;
}

#endif
