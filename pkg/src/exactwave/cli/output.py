import io
import json
import logging
import os
import tempfile
import numpy as np

logger = logging.getLogger(__name__)


def _jsonable(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def atomic_write(path, text):
    """ Write text to path through a temporary file in the same
    directory, so path is either absent or complete
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("wrote %s", path)


def table_text(header, columns):
    buffer = io.StringIO()
    data = np.column_stack([np.ravel(np.asarray(c, dtype=float)) for c in columns])
    np.savetxt(buffer, data, fmt="%.17g", delimiter=",", header=",".join(header), comments="")
    return buffer.getvalue()


def summary_text(summary):
    return json.dumps(summary, indent=2, sort_keys=True, default=_jsonable) + "\n"


def write_outputs(out_dir, name, header, columns, summary, fmt="csv"):
    """ Write a result table and its run summary.

    csv: <name>.csv and <name>.summary.json
    json: <name>.json holding the table and the summary

    Everything is rendered before the first file is written.

    Returns
    -------
    list of str
        The paths written
    """
    if fmt == "csv":
        files = {os.path.join(out_dir, f"{name}.csv"): table_text(header, columns),
                 os.path.join(out_dir, f"{name}.summary.json"): summary_text(summary)}
    elif fmt == "json":
        rows = np.column_stack([np.ravel(np.asarray(c, dtype=float)) for c in columns])
        document = {"columns": list(header), "rows": rows, "summary": summary}
        files = {os.path.join(out_dir, f"{name}.json"): summary_text(document)}
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    for path, text in files.items():
        atomic_write(path, text)
    return list(files)
