"""lexorder: symbolic calculation and verification for linear order types
under the lexicographic product."""

from .ordinals import (CnfOrdinal, CofClass, LawReport, OMEGA, OMEGA_OMEGA,
                       ONE, ZERO, from_int, law_suite, omega_power, ord_add,
                       ord_cmp, ord_cofinality, ord_mul, parse_ordinal,
                       render_ordinal)
from .rj4 import (AffineMap, CutType, EvAffineSeq, GapProfile, Ladder,
                  Rj4Order, Spectrum, ZBlockSum, cut_types, end_data,
                  gap_profile, ladder, ladders_coalesce, make_I, make_L,
                  rj4_mul_omega, slater_iso, spectra_tail_equivalent,
                  spectrum, zsum_iso, zsum_mul_omega)
from .seqs import (EvPeriodicSeq, FlattenReport, Label, between,
                   canonical_rep, cons, flatten_check, label, odd_period_char,
                   parse_seq, periodic, seq_cmp, sequence, tail_equiv,
                   tail_equiv2)
from .terms import (Atom, FinPow, FinSum, IsoVerdict, LexProd, OrdLeaf,
                    OrderTerm, ParseError, Reverse, Rj4Ref, ZSumRef,
                    iso_check, lex_prod, normalize, parse, render, reverse)
from .verify import (CheckResult, Config, VerificationReport, verify_all)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
