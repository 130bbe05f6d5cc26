#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poncelet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// conic construction / access
class InvalidConicError : public Error {
public:
    using Error::Error;
};
class DegenerateConicError : public Error {
public:
    using Error::Error;
};
class NoPolarError : public Error {
public:
    using Error::Error;
};

// a precondition held upstream failed numerically (tolerance breach)
class GeometricInconsistencyError : public Error {
public:
    using Error::Error;
};

class DegenerateTriangleError : public Error {
public:
    using Error::Error;
};
// right triangles break orthic/tangential/polar-circle constructions
class RightTriangleError : public Error {
public:
    using Error::Error;
};
class PolarCircleUndefinedError : public Error {
public:
    using Error::Error;
};

// vertex angle outside the admissible arcs of a Poncelet family
class InadmissibleVertexError : public Error {
public:
    InadmissibleVertexError(const std::string& what,
                            std::vector<std::pair<double, double>> arcs)
        : Error(what), arcs(std::move(arcs)) {}
    std::vector<std::pair<double, double>> arcs;
};

class InfeasibleConfigError : public Error {
public:
    using Error::Error;
};
class UnsupportedScenarioError : public Error {
public:
    using Error::Error;
};
class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

class SingularIterationError : public Error {
public:
    SingularIterationError(const std::string& what, int step)
        : Error(what), step(step) {}
    int step;
};

class SectionRatioError : public Error {
public:
    using Error::Error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class CollapseError : public Error {
public:
    using Error::Error;
};

} // namespace poncelet
