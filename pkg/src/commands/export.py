# -*- coding: utf-8 -*-
#
# pmmeas - probabilistic-valued decomposable set functions
#

"""Handler for `pmmeas export`: CSV plot data of a DDF."""

import json
from argparse import Namespace

from ..config import Config
from ..ddf_core import DiscreteDDF, epsilon, grid_sample
from ..delta_ops import tau_T
from ..errors import ConfigError, IoFailureError, PMMeasError
from ..generators import random_metric
from ..hausdorff import dirac_context, lambda_H
from ..logger import logger
from ..scalar_ops import M
from ..utils import parse_mask, rng_for
from ..views import write_csv


def resolve_target(what: str, default_seed: int) -> DiscreteDDF:
    """
    Resolve an export target:

    - eps:<a>                 the Dirac DDF eps_a
    - ddf:<file>              a DDF stored as JSON ({"atoms": ..., "inf_mass": ...})
    - lambda:<seed>:<n>:<set> Lambda(E) on a seeded n-point Dirac metric space
    """
    kind, _, rest = what.partition(":")
    try:
        if kind == "eps":
            return epsilon(float(rest))
        if kind == "ddf":
            try:
                with open(rest, "r", encoding="utf-8") as f:
                    data = json.load(f)
            except OSError as e:
                raise IoFailureError(f"Could not read {rest}: {e}")
            return DiscreteDDF.from_dict(data)
        if kind == "lambda":
            seed_text, n_text, mask_text = rest.split(":", 2)
            seed = int(seed_text) if seed_text else default_seed
            n = int(n_text)
            if not 1 <= n <= 6:
                raise ConfigError(f"lambda export needs 1 <= n <= 6 points (got {n})")
            d = random_metric(rng_for(seed, f"export:lambda:{n}"), n)
            ctx = dirac_context(d, tau_T(M))
            return lambda_H(ctx, parse_mask(mask_text, n))
    except PMMeasError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise ConfigError(f"Invalid export target '{what}': {e}")
    raise ConfigError(f"Unknown export target '{what}'. Use eps:<a>, ddf:<file> or lambda:<seed>:<n>:<set>")


def handle_export(args: Namespace, config: Config) -> int:
    settings = config.export
    x_max = args.x_max if getattr(args, "x_max", None) is not None else settings.x_max
    step = args.step if getattr(args, "step", None) is not None else settings.step

    F = resolve_target(args.what, config.suite.seed)
    rows = grid_sample(F, x_max, step)
    write_csv(rows, args.out)
    logger.ok(f"Exported {len(rows)} rows of {args.what} to {args.out}")
    return 0
