#pragma once

#include "ncpoly.hpp"

namespace qons {

enum class PresId { OQ_DG, ALT_FULL, ALT_REDUCED, ESS_COMPACT, ESS_COMPACT_SIGMA, POLY_Z };

inline std::string pres_name(PresId id) {
	switch (id) {
		case PresId::OQ_DG: return "OQ_DG";
		case PresId::ALT_FULL: return "ALT_FULL";
		case PresId::ALT_REDUCED: return "ALT_REDUCED";
		case PresId::ESS_COMPACT: return "ESS_COMPACT";
		case PresId::ESS_COMPACT_SIGMA: return "ESS_COMPACT_SIGMA";
		case PresId::POLY_Z: return "POLY_Z";
	}
	return "?";
}

inline PresId pres_from_name(const std::string& s) {
	for (PresId id : {PresId::OQ_DG, PresId::ALT_FULL, PresId::ALT_REDUCED, PresId::ESS_COMPACT,
	                  PresId::ESS_COMPACT_SIGMA, PresId::POLY_Z})
		if (pres_name(id) == s) return id;
	throw UsageError("unknown presentation: " + s);
}

/* One of the six bounded presentations.  instantiate(bound) lists every
 * nonzero defining relation whose degree fits, as polynomials with cleared
 * denominators, in a fixed deterministic order (relation family, then k,
 * then l).  Chained equalities contribute one relation per equation. */
class Presentation {
public:
	explicit Presentation(PresId id) : id_(id) {}

	PresId id() const { return id_; }
	std::string name() const { return pres_name(id_); }

	Alphabet alphabet() const {
		switch (id_) {
			case PresId::OQ_DG: return Alphabet::OQ;
			case PresId::ALT_FULL:
			case PresId::ALT_REDUCED: return Alphabet::ALT;
			case PresId::ESS_COMPACT: return Alphabet::ESS;
			case PresId::ESS_COMPACT_SIGMA: return Alphabet::ESS_SIGMA;
			case PresId::POLY_Z: return Alphabet::Z;
		}
		throw UsageError("bad presentation id");
	}

	DegreeScheme scheme() const {
		switch (id_) {
			case PresId::OQ_DG: return DegreeScheme::LEN_DEG;
			case PresId::ALT_FULL:
			case PresId::ALT_REDUCED: return DegreeScheme::ALT_DEG;
			case PresId::ESS_COMPACT:
			case PresId::ESS_COMPACT_SIGMA: return DegreeScheme::ESS_DEG;
			case PresId::POLY_Z: return DegreeScheme::Z_DEG;
		}
		throw UsageError("bad presentation id");
	}

	int relation_degree(const NcPoly& r) const { return r.degree(scheme()); }

	std::vector<NcPoly> instantiate(int bound) const {
		std::vector<NcPoly> out;
		auto emit = [&](NcPoly r) {
			if (r.is_zero() || relation_degree(r) > bound) return;
			for (const auto& prev : out)
				if (prev == r) return;  // chained equalities can repeat at k=0
			out.push_back(std::move(r));
		};
		switch (id_) {
			case PresId::OQ_DG: emit_qdg(alphabet(), bound, emit); break;
			case PresId::ALT_FULL: emit_alt(bound, emit, false); break;
			case PresId::ALT_REDUCED: emit_alt(bound, emit, true); break;
			case PresId::ESS_COMPACT: emit_compact(bound, emit, false); break;
			case PresId::ESS_COMPACT_SIGMA: emit_compact(bound, emit, true); break;
			case PresId::POLY_Z: emit_poly_z(bound, emit); break;
		}
		return out;
	}

private:
	template <class Emit>
	static void emit_qdg(Alphabet a, int bound, Emit&& emit) {
		NcPoly w0 = NcPoly::gen(a, W(0)), w1 = NcPoly::gen(a, W(1));
		RatFunc rr = -rf(rho());  // (q^2-q^-2)^2
		auto dg = [&](const NcPoly& x, const NcPoly& y) {
			return commutator(x, q_commutator(x, q_commutator(x, y, +1), -1)) -
			       rr * commutator(y, x);
		};
		if (bound >= 4) {
			emit(dg(w0, w1));
			emit(dg(w1, w0));
		}
	}

	template <class Emit>
	void emit_alt(int bound, Emit&& emit, bool reduced) const {
		const Alphabet A = Alphabet::ALT;
		auto Wn = [&](int n) { return NcPoly::gen(A, W(n)); };
		auto Gk = [&](int k) { return NcPoly::gen(A, G(k)); };
		auto Gtk = [&](int k) { return NcPoly::gen(A, Gt(k)); };
		RatFunc qq = rf(q_int(2)), rh = rf(rho());

		// one-index families; a relation of index k has degree 2k+2 or 2k+3
		for (int k = 0; 2 * k + 2 <= bound; ++k) {
			emit(qq * commutator(Wn(0), Wn(k + 1)) - Gtk(k + 1) + Gk(k + 1));
			emit(qq * commutator(Wn(-k), Wn(1)) - Gtk(k + 1) + Gk(k + 1));
		}
		for (int k = 0; 2 * k + 3 <= bound; ++k) {
			emit(q_commutator(Wn(0), Gk(k + 1)) - rh * Wn(-k - 1) + rh * Wn(k + 1));
			emit(q_commutator(Gtk(k + 1), Wn(0)) - rh * Wn(-k - 1) + rh * Wn(k + 1));
		}
		for (int k = 0; 2 * k + 3 <= bound; ++k) {
			emit(q_commutator(Gk(k + 1), Wn(1)) - rh * Wn(k + 2) + rh * Wn(-k));
			emit(q_commutator(Wn(1), Gtk(k + 1)) - rh * Wn(k + 2) + rh * Wn(-k));
		}

		if (reduced) {
			// W-chain commutations restricted to l = 0, then the Gt family
			for (int k = 1; 2 * k + 2 <= bound; ++k) {
				emit(commutator(Wn(-k), Wn(0)));
				emit(commutator(Wn(k + 1), Wn(1)));
			}
			for (int k = 0; k <= bound; ++k)
				for (int l = 0; 2 * k + 2 * l + 4 <= bound; ++l)
					if (k != l) emit(commutator(Gtk(k + 1), Gtk(l + 1)));
			return;
		}

		auto pairs = [&](int extra, auto&& f) {
			for (int k = 0; k <= bound; ++k)
				for (int l = 0; 2 * k + 2 * l + extra <= bound; ++l)
					if (k != l) emit(f(k, l));
		};
		pairs(2, [&](int k, int l) { return commutator(Wn(-k), Wn(-l)); });
		pairs(2, [&](int k, int l) { return commutator(Wn(k + 1), Wn(l + 1)); });
		pairs(2, [&](int k, int l) {
			return commutator(Wn(-k), Wn(l + 1)) + commutator(Wn(k + 1), Wn(-l));
		});
		pairs(3, [&](int k, int l) {
			return commutator(Wn(-k), Gk(l + 1)) + commutator(Gk(k + 1), Wn(-l));
		});
		pairs(3, [&](int k, int l) {
			return commutator(Wn(-k), Gtk(l + 1)) + commutator(Gtk(k + 1), Wn(-l));
		});
		pairs(3, [&](int k, int l) {
			return commutator(Wn(k + 1), Gk(l + 1)) + commutator(Gk(k + 1), Wn(l + 1));
		});
		pairs(3, [&](int k, int l) {
			return commutator(Wn(k + 1), Gtk(l + 1)) + commutator(Gtk(k + 1), Wn(l + 1));
		});
		pairs(4, [&](int k, int l) { return commutator(Gk(k + 1), Gk(l + 1)); });
		pairs(4, [&](int k, int l) { return commutator(Gtk(k + 1), Gtk(l + 1)); });
		pairs(4, [&](int k, int l) {
			return commutator(Gtk(k + 1), Gk(l + 1)) + commutator(Gk(k + 1), Gtk(l + 1));
		});
	}

	template <class Emit>
	void emit_compact(int bound, Emit&& emit, bool sigma) const {
		const Alphabet A = sigma ? Alphabet::ESS_SIGMA : Alphabet::ESS;
		NcPoly w0 = NcPoly::gen(A, W(0)), w1 = NcPoly::gen(A, W(1));
		auto Gg = [&](int k) { return NcPoly::gen(A, sigma ? G(k) : Gt(k)); };
		RatFunc rr = -rf(rho());
		// the sigma variant swaps the roles of W0 and W1 throughout (iii)-(vi)
		NcPoly u = sigma ? w1 : w0, v = sigma ? w0 : w1;

		emit_qdg(A, bound, emit);
		if (bound >= 3) {
			emit(commutator(u, Gg(1)) - commutator(u, q_commutator(u, v)));
			emit(commutator(Gg(1), v) - commutator(q_commutator(u, v), v));
		}
		for (int k = 1; 2 * k + 3 <= bound; ++k) {
			emit(rr * commutator(Gg(k + 1), u) -
			     commutator(u, q_commutator(u, q_commutator(v, Gg(k)))));
			emit(rr * commutator(v, Gg(k + 1)) -
			     commutator(q_commutator(q_commutator(Gg(k), u), v), v));
		}
		for (int k = 0; k <= bound; ++k)
			for (int l = 0; 2 * k + 2 * l + 4 <= bound; ++l)
				if (k != l) emit(commutator(Gg(k + 1), Gg(l + 1)));
	}

	template <class Emit>
	static void emit_poly_z(int bound, Emit&& emit) {
		const Alphabet A = Alphabet::Z;
		for (int m = 1; m <= bound; ++m)
			for (int n = 1; m + n <= bound; ++n)
				if (m != n)
					emit(commutator(NcPoly::gen(A, Zgen(m)), NcPoly::gen(A, Zgen(n))));
	}

	PresId id_;
};

}  // namespace qons
