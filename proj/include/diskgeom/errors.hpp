#pragma once

#include <stdexcept>
#include <string>

namespace diskgeom {

// Base of all domain errors. `name()` is the stable identifier the CLI
// prints when mapping a failure to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& w) : Error("DegenerateInput", w) {}
};
struct CoincidentLines : Error {
    explicit CoincidentLines(const std::string& w) : Error("CoincidentLines", w) {}
};
struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& w) : Error("NotUnimodular", w) {}
};
struct CollinearInput : Error {
    explicit CollinearInput(const std::string& w) : Error("CollinearInput", w) {}
};
struct OutOfDisk : Error {
    explicit OutOfDisk(const std::string& w) : Error("OutOfDisk", w) {}
};
struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& w) : Error("ZeroArgument", w) {}
};
struct DegenerateMap : Error {
    explicit DegenerateMap(const std::string& w) : Error("DegenerateMap", w) {}
};
struct IdenticalPoints : Error {
    explicit IdenticalPoints(const std::string& w) : Error("IdenticalPoints", w) {}
};
struct NoInteriorRoot : Error {
    explicit NoInteriorRoot(const std::string& w) : Error("NoInteriorRoot", w) {}
};
struct DegenerateQuadruple : Error {
    explicit DegenerateQuadruple(const std::string& w) : Error("DegenerateQuadruple", w) {}
};
struct DegenerateConfiguration : Error {
    explicit DegenerateConfiguration(const std::string& w) : Error("DegenerateConfiguration", w) {}
};
struct TangentCircles : Error {
    explicit TangentCircles(const std::string& w) : Error("TangentCircles", w) {}
};
struct PoleInDomain : Error {
    explicit PoleInDomain(const std::string& w) : Error("PoleInDomain", w) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& w) : Error("UsageError", w) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& w) : Error("ValidationError", w) {}
};
struct MissingField : Error {
    explicit MissingField(const std::string& w) : Error("MissingField", w) {}
};

}  // namespace diskgeom
