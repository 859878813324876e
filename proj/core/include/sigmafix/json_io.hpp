#ifndef SIGMAFIX_JSON_IO_HPP
#define SIGMAFIX_JSON_IO_HPP

// JSON schema (versioned, "schema": 1) for descriptors, automorphism
// triples, classes and verdicts. Matrices serialize as row-major integer
// arrays; entries beyond 64 bits fall back to decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "sigmafix/fixpoint.hpp"
#include "sigmafix/grouprep.hpp"
#include "sigmafix/sigma.hpp"

namespace sigmafix::jsonio {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json toJson(const Int& v);
Int intFromJson(const json& j);

json toJson(const zlattice::IntMatrix& m);
zlattice::IntMatrix matrixFromJson(const json& j);

json toJson(const zlattice::FgAbelian& a);
zlattice::FgAbelian fgAbelianFromJson(const json& j);

json toJson(const grouprep::Word& w, const std::vector<std::string>& generatorNames);
grouprep::Word wordFromJson(const json& j, const std::vector<std::string>& generatorNames);

json toJson(const charsphere::CharClass& c);
charsphere::CharClass classFromJson(const json& j);

json toJson(const grouprep::GroupDesc& g);
grouprep::GroupDesc groupFromJson(const json& j);

json toJson(const fixpoint::PsiSpec& psi, const grouprep::GroupDesc& h);
fixpoint::PsiSpec psiFromJson(const json& j, const grouprep::GroupDesc& h);

json toJson(const fixpoint::AutTriple& t);
fixpoint::AutTriple autTripleFromJson(const json& j);

std::vector<fixpoint::PsiSpec> psiListFromJson(const json& j, const grouprep::GroupDesc& h);

json traceToJson(const sigma::Trace& t);
json verdictToJson(const sigma::Verdict& v);
json sigmaDescriptionToJson(const sigma::Sigma1Description& d);

/// Reads a whole JSON document from a file; throws ParseError on failure.
json loadDocument(const std::string& path);

/// Document loaders: expect {"schema": 1, "type": <type>, ...}.
grouprep::GroupDesc loadGroup(const std::string& path);
fixpoint::AutTriple loadAutTriple(const std::string& path);
std::vector<fixpoint::PsiSpec> loadPsiList(const std::string& path,
                                           const grouprep::GroupDesc& h);

}  // namespace sigmafix::jsonio

#endif
