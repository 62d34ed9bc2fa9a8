"""
Preset families of almost-direct products of free groups.

Factor 1 is the quotient end in every family. Action tables are built from
closed formulas, except pure_monomial whose tables ship as data files under
data/towers/pure_monomial. Every family is certified by validate_preset
against its witness representation.

  pure_braid(n)       factors of rank 1..n-1, x_{b,p} = A_{p,b+1}
  upper_mccool(n)     factors of rank 1..n-1, x_{t,p} = eps_{n-t, n-t+p}
  partial_inner(n)    factors of rank 2..n,   x_{t,p} = c_{t+1,p}
  pure_monomial(r, n) factors of rank r(j-1)+1, the kernel of winding mod r
                      around the first strand of the pure braid group on n+1 strands
"""

import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from groups.automorphism import (
    EndoTable,
    compose_all,
    epsilon,
    partial_conjugation,
)
from groups.errors import BiorderError, UnsupportedPresetError
from groups.word import Word, commutator, conjugate, free_reduce, invert
from presets.bundle import PresetBundle, Witness, load_preset_file, witness_of_letters
from tower.spec import ActionKey, ActionPair, Factor, TowerSpec, word_letters
from utils.config import DEFAULT_DATA_DIR, load_config

# Configure logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

PURE_MONOMIAL_MAX_R = 3
PURE_MONOMIAL_MAX_N = 3
PURE_MONOMIAL_DIR = DEFAULT_DATA_DIR / "pure_monomial"


def _x(rank: int, index: int) -> Word:
    return Word.generator(rank, index)


def _spec(name: str, ranks: Sequence[int], actions: Dict[ActionKey, ActionPair],
          provenance: str) -> TowerSpec:
    return TowerSpec(tuple(Factor(r) for r in ranks), actions, name=name, provenance=provenance)


def braid_sigma(rank: int, k: int, inverse: bool = False) -> EndoTable:
    """Artin generator: x_k -> x_k x_{k+1} x_k^-1, x_{k+1} -> x_k"""
    if not 1 <= k < rank:
        raise BiorderError(f"sigma_{k} needs 1 <= k < {rank}")
    a, b = _x(rank, k), _x(rank, k + 1)
    if inverse:
        return EndoTable.from_images(rank, {k: b, k + 1: invert(b) * a * b})
    return EndoTable.from_images(rank, {k: a * b * invert(a), k + 1: a})


def artin_pure_braid(rank: int, i: int, j: int, inverse: bool = False) -> EndoTable:
    """A_ij = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1"""
    if not 1 <= i < j <= rank:
        raise BiorderError(f"A_{i}{j} needs 1 <= i < j <= {rank}")
    outer = [braid_sigma(rank, k) for k in range(j - 1, i, -1)]
    outer_inverse = [braid_sigma(rank, k, inverse=True) for k in range(i + 1, j)]
    middle = [braid_sigma(rank, i, inverse=inverse)] * 2
    return compose_all(outer + middle + outer_inverse, rank)


def _braid_action(rank: int, r: int, s: int, inverse: bool) -> EndoTable:
    """Conjugation action of A_{r,s} on the free kernel <A_{1,j}, ..., A_{rank,j}>"""
    yr, ys = _x(rank, r), _x(rank, s)
    c = yr * ys
    if inverse:
        between = invert(yr) * invert(ys) * yr * ys
        images = {r: conjugate(yr, c), s: conjugate(ys, c)}
        images.update({i: conjugate(_x(rank, i), between) for i in range(r + 1, s)})
    else:
        between = commutator(yr, ys)
        images = {r: c * yr * invert(c), s: c * ys * invert(c)}
        images.update({i: between * _x(rank, i) * invert(between) for i in range(r + 1, s)})
    return EndoTable.from_images(rank, images)


def pure_braid(n: int) -> PresetBundle:
    if n < 2:
        raise UnsupportedPresetError(f"pure_braid needs n >= 2, got {n}")
    ranks = list(range(1, n))
    actions = {}
    for b in ranks:
        for a in range(1, b):
            for p in range(1, a + 1):
                actions[(a, p, b)] = ActionPair(_braid_action(b, p, a + 1, False),
                                                _braid_action(b, p, a + 1, True))
    witness: Witness = {
        (b, p): (artin_pure_braid(n, p, b + 1), artin_pure_braid(n, p, b + 1, inverse=True))
        for b in ranks for p in range(1, b + 1)
    }
    boundary = {b: free_reduce(range(1, b + 1), b) for b in ranks if b > 1}
    provenance = ("Pure braid group on n strands; factor b is the free kernel "
                  "<A_{1,b+1}, ..., A_{b,b+1}> of forgetting strand b+1, acted on by "
                  "conjugation. Witness: Artin representation.")
    name = f"pure_braid:{n}"
    return PresetBundle(name, _spec(name, ranks, actions, provenance),
                        witness, n, provenance, boundary)


def upper_mccool(n: int) -> PresetBundle:
    if n < 2:
        raise UnsupportedPresetError(f"upper_mccool needs n >= 2, got {n}")
    ranks = list(range(1, n))
    actions = {}
    for b in ranks:
        for a in range(1, b):
            moved = b - a
            for p in range(1, a + 1):
                x, by = _x(b, moved), _x(b, moved + p)
                actions[(a, p, b)] = ActionPair(
                    EndoTable.from_images(b, {moved: conjugate(x, invert(by))}),
                    EndoTable.from_images(b, {moved: conjugate(x, by)}),
                )
    witness: Witness = {
        (t, p): (epsilon(n, n - t, n - t + p), epsilon(n, n - t, n - t + p, inverse=True))
        for t in ranks for p in range(1, t + 1)
    }
    provenance = ("Upper McCool group: generated by eps_ij (i < j), x_i -> x_j^-1 x_i x_j. "
                  "Factor t is <eps_{n-t,j} : j > n-t>.")
    name = f"upper_mccool:{n}"
    return PresetBundle(name, _spec(name, ranks, actions, provenance), witness, n, provenance)


def partial_inner(n: int) -> PresetBundle:
    if n < 2:
        raise UnsupportedPresetError(f"partial_inner needs n >= 2, got {n}")
    ranks = [t + 1 for t in range(1, n)]
    actions = {}
    for b in range(1, n):
        rank = b + 1
        for a in range(1, b):
            for p in range(1, a + 2):
                by = _x(rank, p)
                moved = [q for q in range(1, a + 2) if q != p]
                actions[(a, p, b)] = ActionPair(
                    EndoTable.from_images(rank, {q: conjugate(_x(rank, q), by) for q in moved}),
                    EndoTable.from_images(rank, {q: conjugate(_x(rank, q), invert(by))
                                                 for q in moved}),
                )
    witness: Witness = {
        (t, p): (partial_conjugation(n, t + 1, p), partial_conjugation(n, t + 1, p, inverse=True))
        for t in range(1, n) for p in range(1, t + 2)
    }
    provenance = ("Partial inner automorphisms: c_ki conjugates x_1..x_k by x_i. "
                  "Factor t is <c_{t+1,1}, ..., c_{t+1,t+1}>.")
    name = f"partial_inner:{n}"
    return PresetBundle(name, _spec(name, ranks, actions, provenance), witness, n, provenance)


def schreier_basis(rank: int, r: int) -> List[Word]:
    """y1^r, then y1^k ym y1^-k for m = 2..rank, k = 0..r-1"""
    y1 = _x(rank, 1)
    basis = [y1 ** r]
    for m in range(2, rank + 1):
        for k in range(r):
            basis.append(y1 ** k * _x(rank, m) * y1 ** -k)
    return basis


def schreier_rewrite(word: Word, r: int) -> Word:
    """
    Spell a word of the index-r subgroup in its Schreier basis

    Args:
        word: Word in F_rank whose x1 exponent sum is divisible by r
        r: Index of the subgroup

    Returns:
        The same element over the r(rank-1)+1 basis elements of schreier_basis
    """
    coset = 0
    out = []
    for generator, step in word.letters():
        if generator == 1:
            if step > 0:
                if coset == r - 1:
                    out.append((1, 1))
                    coset = 0
                else:
                    coset += 1
            elif coset == 0:
                out.append((1, -1))
                coset = r - 1
            else:
                coset -= 1
        else:
            out.append((2 + (generator - 2) * r + coset, step))
    if coset != 0:
        raise BiorderError(f"{word} is not in the index-{r} subgroup")
    return free_reduce(out, r * (word.rank - 1) + 1)


def pure_monomial_path(r: int, n: int) -> Path:
    return PURE_MONOMIAL_DIR / f"pure_monomial_{r}_{n}.json"


def _check_pure_monomial_range(r: int, n: int):
    if not (1 <= r <= PURE_MONOMIAL_MAX_R and 1 <= n <= PURE_MONOMIAL_MAX_N):
        raise UnsupportedPresetError(
            f"pure_monomial supports 1 <= r <= {PURE_MONOMIAL_MAX_R} and "
            f"1 <= n <= {PURE_MONOMIAL_MAX_N}, got r={r}, n={n}"
        )


def derive_pure_monomial_tower(r: int, n: int) -> TowerSpec:
    """
    Rewrite the pure braid actions on P(r, n) in the Schreier bases

    This is how the shipped tables under data/towers/pure_monomial were
    produced; pure_monomial itself reads the files.
    """
    _check_pure_monomial_range(r, n)
    braid = pure_braid(n + 1)
    ranks = [r * (j - 1) + 1 for j in range(1, n + 1)]
    bases = {j: schreier_basis(j, r) for j in range(1, n + 1)}
    actions = {}
    for b in range(2, n + 1):
        for a in range(1, b):
            for p, source in enumerate(bases[a], start=1):
                forward = word_letters(a, source)
                backward = word_letters(a, invert(source))
                table = EndoTable(ranks[b - 1], tuple(
                    schreier_rewrite(braid.tower.act(forward, target, b), r) for target in bases[b]))
                inverse = EndoTable(ranks[b - 1], tuple(
                    schreier_rewrite(braid.tower.act(backward, target, b), r) for target in bases[b]))
                if not table.is_identity():
                    actions[(a, p, b)] = ActionPair(table, inverse)
    provenance = (f"Pure monomial braid group P({r},{n}): kernel of winding mod {r} about the "
                  f"first strand of the pure braid group on {n + 1} strands. Factor j is the "
                  "index-r subgroup of the pure braid factor j in its Schreier basis.")
    return _spec(f"pure_monomial:{r},{n}", ranks, actions, provenance)


def pure_monomial(r: int, n: int) -> PresetBundle:
    """Shipped action tables; the witness lifts each Schreier basis element to P_{n+1}"""
    _check_pure_monomial_range(r, n)
    shipped = load_preset_file(pure_monomial_path(r, n))
    braid = pure_braid(n + 1)
    witness: Witness = {}
    for j in range(1, n + 1):
        for p, source in enumerate(schreier_basis(j, r), start=1):
            witness[(j, p)] = (witness_of_letters(braid, word_letters(j, source)),
                               witness_of_letters(braid, word_letters(j, invert(source))))
    return PresetBundle(shipped.name, shipped.tower, witness, n + 1, shipped.provenance)


def direct_product(*ranks: int) -> PresetBundle:
    if not ranks or any(r < 1 for r in ranks):
        raise UnsupportedPresetError(f"direct_product needs positive ranks, got {ranks}")
    name = "direct_product:" + ",".join(str(r) for r in ranks)
    provenance = "Direct product of free groups; every action is the identity."
    return PresetBundle(name, _spec(name, ranks, {}, provenance), provenance=provenance)


def klein_bottle() -> PresetBundle:
    """Negative control: Z acting on Z by inversion, which is not IA"""
    flip = EndoTable(1, (Word.generator(1, 1, -1),))
    provenance = "Klein bottle group as Z by Z with x -> x^-1; not an almost-direct product."
    actions = {(1, 1, 2): ActionPair(flip, flip)}
    return PresetBundle("klein_bottle", _spec("klein_bottle", (1, 1), actions, provenance),
                        provenance=provenance)


class PresetBuilderBase(ABC):
    """Base class for preset builders"""

    def __init__(self, name: str, arity: Optional[int], description: str):
        self.name = name
        self.arity = arity
        self.description = description

    def create(self, *params: int) -> PresetBundle:
        if self.arity is not None and len(params) != self.arity:
            raise UnsupportedPresetError(
                f"Preset {self.name} takes {self.arity} parameter(s), got {len(params)}"
            )
        bundle = self._build(*params)
        logger.info(f"Built preset {bundle.name} with ranks {bundle.ranks}")
        return bundle

    @abstractmethod
    def _build(self, *params: int) -> PresetBundle:
        pass


class FormulaPresetBuilder(PresetBuilderBase):
    """Preset built from closed formulas"""

    def __init__(self, name: str, arity: Optional[int], description: str,
                 build: Callable[..., PresetBundle]):
        super().__init__(name, arity, description)
        self._builder = build

    def _build(self, *params: int) -> PresetBundle:
        return self._builder(*params)


class FilePresetBuilder(PresetBuilderBase):
    """Preset shipped as a tower-spec file"""

    def __init__(self, path: Path):
        super().__init__(path.stem, 0, f"tower-spec file {path.name}")
        self.path = path

    def _build(self) -> PresetBundle:
        return load_preset_file(self.path)


BUILDERS: Dict[str, PresetBuilderBase] = {
    builder.name: builder for builder in (
        FormulaPresetBuilder("pure_braid", 1, "pure braid group P_n", pure_braid),
        FormulaPresetBuilder("upper_mccool", 1, "upper McCool group Cb_n^+", upper_mccool),
        FormulaPresetBuilder("partial_inner", 1, "partial inner automorphisms I_n", partial_inner),
        FormulaPresetBuilder("pure_monomial", 2, "pure monomial braid group P(r,n)", pure_monomial),
        FormulaPresetBuilder("direct_product", None, "direct product of free groups",
                             direct_product),
    )
}


def parse_preset_name(text: str) -> Tuple[str, Tuple[int, ...]]:
    """``upper_mccool:3`` -> ("upper_mccool", (3,)); ``pure_monomial:2,2`` -> (..., (2, 2))"""
    name, _, args = text.strip().partition(":")
    if not args:
        return name, ()
    try:
        return name, tuple(int(a) for a in args.split(","))
    except ValueError:
        raise UnsupportedPresetError(f"Preset parameters must be integers: {text}")


class PresetFactory:
    """Factory class to create preset bundles"""

    @staticmethod
    def create_preset(name: str, *params: int, data_dir: Optional[str] = None) -> PresetBundle:
        """
        Create a preset by name

        Formula families come first; any other name is looked up as
        ``<name>.json`` in the preset data directory.

        Args:
            name: Family name, e.g. ``pure_braid``
            params: Integer parameters of the family
            data_dir: Directory of preset files (default PRESET_DATA_DIR)

        Returns:
            The preset bundle
        """
        builder = BUILDERS.get(name)
        if builder is None:
            path = Path(data_dir or load_config()["PRESET_DATA_DIR"]) / f"{name}.json"
            if not path.is_file():
                raise UnsupportedPresetError(f"Unsupported preset: {name}")
            builder = FilePresetBuilder(path)
        return builder.create(*params)

    @staticmethod
    def create_from_text(text: str, data_dir: Optional[str] = None) -> PresetBundle:
        name, params = parse_preset_name(text)
        return PresetFactory.create_preset(name, *params, data_dir=data_dir)

    @staticmethod
    def get_available_presets(data_dir: Optional[str] = None) -> List[str]:
        """Get list of available presets"""
        directory = Path(data_dir or load_config()["PRESET_DATA_DIR"])
        files = sorted(p.stem for p in directory.glob("*.json")
                       if p.stem not in BUILDERS and not p.stem.endswith(".schema"))
        return list(BUILDERS) + files
