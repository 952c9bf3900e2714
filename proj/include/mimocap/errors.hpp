#pragma once

#include <stdexcept>
#include <string>

namespace mimocap {

// Base class for every error raised by the simulator.
struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// matrix kernel
struct NotPositiveDefinite : SimError { using SimError::SimError; };
struct NonRealDiagonal : SimError { using SimError::SimError; };
struct DimensionMismatch : SimError { using SimError::SimError; };
struct DomainError : SimError { using SimError::SimError; };

// fading
struct InvalidShape : SimError { using SimError::SimError; };

// channel
struct RhoOutOfRange : SimError { using SimError::SimError; };

// receivers
struct RankDeficient : SimError { using SimError::SimError; };
struct ApproximationInvalid : SimError { using SimError::SimError; };

// monte carlo / statistics
struct EmptySamples : SimError { using SimError::SimError; };
struct BadProbability : SimError { using SimError::SimError; };

// configuration / cli
struct ConfigInvalid : SimError { using SimError::SimError; };
struct ParseError : ConfigInvalid { using ConfigInvalid::ConfigInvalid; };
struct ValidationError : ConfigInvalid { using ConfigInvalid::ConfigInvalid; };

}  // namespace mimocap
