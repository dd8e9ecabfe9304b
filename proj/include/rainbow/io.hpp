#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/colouring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/sequence.hpp"
#include "rainbow/split.hpp"

namespace rainbow {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All readers skip '#' comments and blank lines. Writers emit the canonical
// layout so that write(read(x)) reproduces a canonical file byte for byte.

/// "n k" then k counts.
DistributionSequence read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const DistributionSequence& seq);

/// "n k" then rows u = 1..n-1 listing colours of (u, v) for v = u+1..n.
Colouring read_colouring(std::istream& in);
void write_colouring(std::ostream& out, const Colouring& col);

/// "m" then one "u v" line per edge.
TargetGraph read_target(std::istream& in);
void write_target(std::ostream& out, const TargetGraph& h);

/// "n k" then "lo hi t colour" per step; metadata lines prefixed "#".
SplitCertificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const SplitCertificate& cert);

DistributionSequence load_sequence(const std::string& path);
Colouring load_colouring(const std::string& path);
TargetGraph load_target(const std::string& path);
SplitCertificate load_certificate(const std::string& path);

void save(const std::string& path, const DistributionSequence& seq);
void save(const std::string& path, const Colouring& col);
void save(const std::string& path, const TargetGraph& h);
void save(const std::string& path, const SplitCertificate& cert);

}  // namespace rainbow
