#include "colie/serialize.hpp"

namespace colie {

Json element_json(const CoinvElem& a) {
    Json out = Json::array();
    for (const auto& [n, c] : a.terms())
        out.push_back({{"coeff", c.str()}, {"necklace", word_str(n.rep(), a.space())}});
    return out;
}

Json tensor_json(const TensorElem& t) {
    Json out = Json::array();
    for (const auto& [w, c] : t.terms())
        out.push_back({{"coeff", c.str()}, {"word", word_str(w, t.space())}});
    return out;
}

Json pq_json(const PQPair& pq) {
    return Json{{"p", tensor_json(pq.p)}, {"q", tensor_json(pq.q)}};
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

} // namespace colie
