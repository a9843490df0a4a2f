#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvechi {

// Base of every error raised by the library. The CLI maps the category to an
// exit code: validation-type errors exit 2, budget exhaustion 3, I/O 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "Error"; }
};

#define CURVECHI_DECLARE_ERROR(Name, Base)                                  \
    class Name : public Base {                                              \
    public:                                                                 \
        explicit Name(const std::string& what) : Base(what) {}              \
        const char* kind() const noexcept override { return #Name; }        \
    }

CURVECHI_DECLARE_ERROR(GeometryError, Error);
CURVECHI_DECLARE_ERROR(OverlapError, GeometryError);
CURVECHI_DECLARE_ERROR(TangencyError, GeometryError);
CURVECHI_DECLARE_ERROR(CollinearError, GeometryError);
CURVECHI_DECLARE_ERROR(NotSimpleError, GeometryError);
CURVECHI_DECLARE_ERROR(CoordinateRangeError, GeometryError);

CURVECHI_DECLARE_ERROR(FamilyError, Error);
CURVECHI_DECLARE_ERROR(OddCrossingError, FamilyError);
CURVECHI_DECLARE_ERROR(DuplicateBasepointError, FamilyError);
CURVECHI_DECLARE_ERROR(KindMismatchError, FamilyError);

CURVECHI_DECLARE_ERROR(ReductionError, Error);
CURVECHI_DECLARE_ERROR(AuxiliaryNotFourColorable, ReductionError);
CURVECHI_DECLARE_ERROR(IntervalCrossingError, ReductionError);
CURVECHI_DECLARE_ERROR(BelowBaselineIntersectionError, ReductionError);
CURVECHI_DECLARE_ERROR(ImproperCellColoring, ReductionError);
CURVECHI_DECLARE_ERROR(PreconditionUnmet, ReductionError);

CURVECHI_DECLARE_ERROR(ScaleOverflow, Error);
CURVECHI_DECLARE_ERROR(ImproperColoring, Error);

CURVECHI_DECLARE_ERROR(FormatError, Error);
CURVECHI_DECLARE_ERROR(IoError, Error);

#undef CURVECHI_DECLARE_ERROR

// Raised by the exact solvers when the node or time budget runs out. Carries
// the best bounds established before giving up.
class SolverBudgetExceeded : public Error {
public:
    SolverBudgetExceeded(const std::string& what, int lower, int upper)
        : Error(what), lower_(lower), upper_(upper) {}
    const char* kind() const noexcept override { return "SolverBudgetExceeded"; }
    int lower_bound() const noexcept { return lower_; }
    int upper_bound() const noexcept { return upper_; }

private:
    int lower_;
    int upper_;
};

}  // namespace curvechi
