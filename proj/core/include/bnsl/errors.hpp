#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bnsl {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CycleDetected : public Error {
public:
    explicit CycleDetected(std::vector<int> cycle)
        : Error("selection induces a directed cycle"), cycle_(std::move(cycle)) {}
    const std::vector<int>& cycle() const { return cycle_; }

private:
    std::vector<int> cycle_;
};

class MissingNode : public Error {
public:
    explicit MissingNode(int node)
        : Error("no column selected for node " + std::to_string(node)), node_(node) {}
    int node() const { return node_; }

private:
    int node_;
};

class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& where) : Error("non-finite value in " + where) {}
};

class SingularSubmatrix : public Error {
public:
    explicit SingularSubmatrix(const std::string& msg) : Error(msg) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

class OutOfBox : public Error {
public:
    explicit OutOfBox(const std::string& msg) : Error(msg) {}
};

class LpFailure : public Error {
public:
    explicit LpFailure(const std::string& msg) : Error(msg) {}
};

class NumericalBreakdown : public LpFailure {
public:
    explicit NumericalBreakdown(const std::string& msg) : LpFailure(msg) {}
};

class NoIncumbent : public Error {
public:
    explicit NoIncumbent(const std::string& msg) : Error(msg) {}
};

class WarmUnavailable : public Error {
public:
    WarmUnavailable() : Error("warm start requested before any master solve") {}
};

class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class ArityViolation : public Error {
public:
    explicit ArityViolation(const std::string& msg) : Error(msg) {}
};

class NodeMismatch : public Error {
public:
    explicit NodeMismatch(const std::string& msg) : Error(msg) {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace bnsl
