#pragma once

#include <stdexcept>
#include <string>

namespace syt {

// Failure conditions are named after the rule they violate so callers can
// match on the condition rather than parse message text.
enum class errc {
    invalid_partition,
    empty_row,
    empty_shape,
    missing_origin,
    disconnected,
    row_not_contiguous,
    interior_column_violation,
    overlapping_copies,
    not_compatible,
    unstable_shape,
    shape_too_large,
    too_many_tableaux,
    construction_failed,
    index_out_of_range,
    not_on_coefficient_shape,
    shape_too_small,
    enumeration_limit_exceeded,
    below_range,
    not_square,
    not_monic,
    too_few_terms,
    not_a_subset,
    not_redundant,
    rows_not_identical,
    dimension_mismatch,
    parse_error,
    internal_inconsistency,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_partition:         return "InvalidPartition";
        case errc::empty_row:                 return "EmptyRow";
        case errc::empty_shape:               return "EmptyShape";
        case errc::missing_origin:            return "MissingOrigin";
        case errc::disconnected:              return "Disconnected";
        case errc::row_not_contiguous:        return "RowNotContiguous";
        case errc::interior_column_violation: return "InteriorColumnViolation";
        case errc::overlapping_copies:        return "OverlappingCopies";
        case errc::not_compatible:            return "NotCompatible";
        case errc::unstable_shape:            return "UnstableShape";
        case errc::shape_too_large:           return "ShapeTooLarge";
        case errc::too_many_tableaux:         return "TooManyTableaux";
        case errc::construction_failed:       return "ConstructionFailed";
        case errc::index_out_of_range:        return "IndexOutOfRange";
        case errc::not_on_coefficient_shape:  return "NotOnCoefficientShape";
        case errc::shape_too_small:           return "ShapeTooSmall";
        case errc::enumeration_limit_exceeded:return "EnumerationLimitExceeded";
        case errc::below_range:               return "BelowRange";
        case errc::not_square:                return "NotSquare";
        case errc::not_monic:                 return "NotMonic";
        case errc::too_few_terms:             return "TooFewTerms";
        case errc::not_a_subset:              return "NotASubset";
        case errc::not_redundant:             return "NotRedundant";
        case errc::rows_not_identical:        return "RowsNotIdentical";
        case errc::dimension_mismatch:        return "DimensionMismatch";
        case errc::parse_error:               return "ParseError";
        case errc::internal_inconsistency:    return "InternalInconsistency";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace syt
