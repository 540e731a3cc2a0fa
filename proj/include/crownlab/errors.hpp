#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crownlab {

/// Precondition violation on caller-supplied parameters.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base of every labeling-validation failure.
class LabelingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotBijective : public LabelingError {
public:
    using LabelingError::LabelingError;
};

/// Two edges whose label sums disagree. Indices refer to the graph's edge list.
class NonConstantValence : public LabelingError {
public:
    NonConstantValence(const std::string& what, std::size_t first_edge, std::size_t second_edge)
        : LabelingError(what), first_edge_(first_edge), second_edge_(second_edge) {}

    std::size_t first_edge() const noexcept { return first_edge_; }
    std::size_t second_edge() const noexcept { return second_edge_; }

private:
    std::size_t first_edge_;
    std::size_t second_edge_;
};

/// The vertex-sum multiset of a candidate super edge-magic labeling is not
/// a run of consecutive integers. Carries the sorted sums.
class NotConsecutiveSums : public LabelingError {
public:
    NotConsecutiveSums(const std::string& what, std::vector<int> sums)
        : LabelingError(what), sums_(std::move(sums)) {}

    const std::vector<int>& sums() const noexcept { return sums_; }

private:
    std::vector<int> sums_;
};

/// A serialized certificate or report that does not check out.
class InvalidCertificate : public LabelingError {
public:
    using LabelingError::LabelingError;
};

class NotACrownShape : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because the search space is over the limit.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(const std::string& what, std::uint64_t estimated)
        : std::runtime_error(what), estimated_(estimated) {}

    std::uint64_t estimated_size() const noexcept { return estimated_; }

private:
    std::uint64_t estimated_;
};

/// A construction that should be total produced an invalid object.
class ConstructionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace crownlab
