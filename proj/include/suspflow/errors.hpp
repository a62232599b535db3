#pragma once

#include <stdexcept>
#include <string>

namespace suspflow {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// matrix_lab
struct NotSquare : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct MixedSpectrumUnsupported : Error { using Error::Error; };

// curve_factory
struct NonPositiveSpectrum : Error { using Error::Error; };
struct SignPairingUnsupported : Error { using Error::Error; };

// invariant_forge
struct UnknownVariable : Error { using Error::Error; };
struct SolveFailure : Error { using Error::Error; };
struct UnitEigenvalueUnsupported : Error { using Error::Error; };
struct NotFiniteOrderRotation : Error { using Error::Error; };

// geodesic_engine
struct StepSizeUnderflow : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };

// dynamics_probe
struct NotUnitBundle : Error { using Error::Error; };
struct NotOnInvariantSubmanifold : Error { using Error::Error; };

}  // namespace suspflow
