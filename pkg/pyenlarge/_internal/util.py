import concurrent.futures
import datetime
import hashlib
import json
import numpy as np
from typing import Any, Callable, List, Optional, Sequence, Tuple


# json converter
def json_converter(o):
    if isinstance(o, datetime.datetime):
        return o.__str__()
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.bool_):
        return bool(o)
    raise TypeError("Object of type %s is not JSON serializable" % (type(o).__name__))


def dumps_sorted(o: Any) -> str:
    return json.dumps(o, default=json_converter, sort_keys=True, indent=2)


def short_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[0:16]


def path_rng(seed: int, index: int) -> np.random.Generator:
    # one counter-based stream per (seed, path index), independent of worker layout
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(index)])))


def mean_and_se(values: Sequence[float]) -> Tuple[float, float]:
    arr = np.asarray(values, dtype=float)
    if (arr.size == 0):
        return (float("nan"), float("nan"))
    if (arr.size == 1):
        return (float(arr[0]), 0.0)
    return (float(arr.mean()), float(arr.std(ddof=1) / np.sqrt(arr.size)))


def scalar_or_array(values: np.ndarray, like: Any) -> Any:
    # floats for scalar inputs, arrays otherwise
    if (np.ndim(like) == 0):
        return float(values)
    return values


def map_ordered(fn: Callable[[Any], Any], items: Sequence[Any], threads: Optional[int] = 1) -> List[Any]:
    # results in input order whatever the number of worker threads
    if (threads is None or threads <= 1 or len(items) < 2):
        return [fn(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))
