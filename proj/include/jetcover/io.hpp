#ifndef JETCOVER_IO_HPP
#define JETCOVER_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "jetcover/clutter.hpp"
#include "jetcover/covers.hpp"
#include "jetcover/invariants.hpp"
#include "jetcover/lifting.hpp"

namespace jetcover {

using nlohmann::json;

/// {"vertices":["x","y"],"edges":[["x","y"]]}; vertices referenced by
/// label. Parsing canonicalizes (labels sorted, edges reduced).
json clutterToJson(const Clutter& c);
Clutter clutterFromJson(const json& j);
Graph graphFromJson(const json& j);

/// {"variables":["x","y"],"generators":["x^2*y"]}.
json idealToJson(const MonomialIdeal& ideal);
MonomialIdeal idealFromJson(const json& j);

json coverListToJson(const Universe& u, const std::vector<VertexSet>& covers);
json kCoverToJson(const Universe& u, const KCover& cover);

json fVectorToJson(const FVector& f);
json hilbertToJson(const HilbertSeries& h);

json bettiToJson(const BettiTable& t);
/// Diagram text with a header row of homological degrees, a total row and
/// one row per regularity stratum, dots for zero entries.
std::string bettiDiagram(const BettiTable& t);

json liftingMatrixToJson(const LiftingMatrix& m);
std::string liftingMatrixText(const LiftingMatrix& m);

struct CorpusResult {
    std::vector<Graph> graphs;
    std::vector<std::string> warnings;
};

/// Newline-delimited records of edge tokens like "x-y y-z", one graph per
/// line; or a JSON file holding one clutter object or an array of them.
/// Malformed lines are reported with their line number and skipped.
CorpusResult ingestGraphCorpus(std::istream& in);
CorpusResult ingestGraphCorpusFile(const std::string& path);

} // namespace jetcover

#endif
