#pragma once

#include <stdexcept>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/sequence.hpp"

namespace rainbow {

class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One peel: the top t vertices of [1..x] had every incident edge inside [1..x]
/// coloured with `minor` (exactly `minor_edges` of them) or `major`.
struct Peel {
    int x = 0;
    int t = 0;
    Colour minor = kNoColour;
    Colour major = kNoColour;
    Count minor_edges = 0;
};

struct Mindeg3Result {
    Colouring colouring;
    std::vector<Peel> peels;
    Colour final_colour = kNoColour;  // colour of the last monochromatic block
};

/// Every peeled vertex sees at most two colours, so no rainbow subgraph of
/// minimum degree 3 can use it. Throws PreconditionViolation when n < 2k.
Mindeg3Result construct_mindeg3(const DistributionSequence& seq);

}  // namespace rainbow
