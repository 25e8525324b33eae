"""Procedural parametric face renderer, samplers, reenactment oracle, corpus I/O.

Every image in the toy corpus is a deterministic function of a `FaceParams`
record, which makes ground-truth expression/pose/identity available for all
metrics. Images are CHW float32 in [-1, 1]; stored frames are 8-bit RGB PNG.

On-disk clip layout (written by `generate_corpus`):

    <out_dir>/manifest.json                  corpus index + content digest
    <out_dir>/<subject>/<clip>/frame_%04d.png
    <out_dir>/<subject>/<clip>/params.json   per-frame FaceParams (schema v1)
    <out_dir>/<subject>/<clip>/meta.json     seeds and canvas

Regenerating with the same seed reproduces every byte, including the digest.
"""

from __future__ import annotations

import hashlib
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import ArgumentError, DataError

PARAMS_SCHEMA_VERSION = 1

IDENTITY_DIM = 8
EXPRESSION_CHANNELS = (
    "eye_open_left",
    "eye_open_right",
    "mouth_open",
    "mouth_wide",
    "brow_raise",
    "pupil_shift_x",
)
POSE_CHANNELS = ("yaw", "pitch", "roll", "tx", "ty", "scale")

# validation ranges; translation is expressed as a fraction of the canvas
YAW_MAX, PITCH_MAX, ROLL_MAX = 0.6, 0.3, 0.3
TRANSLATE_MAX_FRAC = 0.125
SCALE_MIN, SCALE_MAX = 0.8, 1.2

# bounds the motion sampler (and probe fitting) actually draws from
SAMPLER_TRANSLATE_FRAC = 0.0625
SAMPLER_SCALE_RANGE = (0.88, 1.12)

# feature shear per radian of yaw/pitch, as a fraction of the canvas
YAW_SHEAR, PITCH_SHEAR = 0.20, 0.24

_oracle_calls = 0


def oracle_call_count() -> int:
    """Total `reenact_oracle` invocations in this process (leak guard for inference)."""
    return _oracle_calls


@dataclass
class FaceParams:
    """Ground-truth identity / expression / pose record driving the renderer.

    identity: 8 values in [-1, 1] — head width/height ratio, jaw roundness,
        eye spacing, eye size, mouth width, skin tone, hair tone, background
        tone.
    expression: 6 values, see EXPRESSION_CHANNELS.
    pose: yaw/pitch/roll (radians), tx/ty (pixels), uniform scale.
    """

    identity: np.ndarray
    expression: np.ndarray
    pose: np.ndarray

    def __post_init__(self):
        self.identity = np.asarray(self.identity, dtype=np.float64).reshape(IDENTITY_DIM)
        self.expression = np.asarray(self.expression, dtype=np.float64).reshape(len(EXPRESSION_CHANNELS))
        self.pose = np.asarray(self.pose, dtype=np.float64).reshape(len(POSE_CHANNELS))

    def validate(self, canvas: int):
        if np.any(np.abs(self.identity) > 1.0 + 1e-9):
            raise ArgumentError(f"identity components must lie in [-1, 1], got {self.identity}")
        e = self.expression
        if np.any(e[:4] < -1e-9) or np.any(e[:4] > 1.0 + 1e-9):
            raise ArgumentError(f"eye/mouth expression channels must lie in [0, 1], got {e[:4]}")
        if abs(e[4]) > 1.0 + 1e-9 or abs(e[5]) > 1.0 + 1e-9:
            raise ArgumentError(f"brow_raise and pupil_shift_x must lie in [-1, 1], got {e[4:]}")
        yaw, pitch, roll, tx, ty, scale = self.pose
        if abs(yaw) > YAW_MAX + 1e-9 or abs(pitch) > PITCH_MAX + 1e-9 or abs(roll) > ROLL_MAX + 1e-9:
            raise ArgumentError(f"pose angles out of range: yaw={yaw}, pitch={pitch}, roll={roll}")
        tmax = TRANSLATE_MAX_FRAC * canvas
        if abs(tx) > tmax + 1e-9 or abs(ty) > tmax + 1e-9:
            raise ArgumentError(f"translation out of range (max {tmax:.2f}px): tx={tx}, ty={ty}")
        if not SCALE_MIN - 1e-9 <= scale <= SCALE_MAX + 1e-9:
            raise ArgumentError(f"scale must lie in [{SCALE_MIN}, {SCALE_MAX}], got {scale}")

    def copy(self) -> "FaceParams":
        return FaceParams(self.identity.copy(), self.expression.copy(), self.pose.copy())

    def to_dict(self) -> dict:
        return {
            "identity": [float(v) for v in self.identity],
            "expression": [float(v) for v in self.expression],
            "pose": [float(v) for v in self.pose],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FaceParams":
        return cls(np.array(d["identity"]), np.array(d["expression"]), np.array(d["pose"]))


def _geometry(identity: np.ndarray, canvas: int) -> dict:
    """Canonical (unposed) face geometry in canvas pixels, derived from identity.

    Expression-driven extents (eyelid aperture, mouth slot, pupil travel, brow
    lift) are absolute fractions of the canvas rather than of the identity-
    scaled features, which keeps expression photometry additive across
    identities.
    """
    c = float(canvas)
    i = identity
    bg_b = 0.60 + 0.24 * i[7]
    hair_r = 0.40 + 0.22 * i[6]
    return {
        "head_rx": (0.27 + 0.04 * i[0]) * c,
        "head_ry": (0.36 - 0.02 * i[0]) * c,
        "jaw": 0.16 - 0.10 * i[1],
        "eye_dx": (0.115 + 0.018 * i[2]) * c,
        "eye_y": -0.08 * c,
        "eye_r": (0.058 + 0.018 * i[3]) * c,
        "mouth_y": 0.16 * c,
        "mouth_rx_base": (0.085 + 0.016 * i[4]) * c,
        "skin": np.array([0.62, 0.50, 0.41]) + i[5] * np.array([0.10, 0.09, 0.08]),
        # face pixels keep red - blue >= ~0.18 while the background keeps
        # red - blue = -0.28, so a fixed channel test segments the head
        "hair": np.array([hair_r, 0.78 * hair_r, max(hair_r - 0.18, 0.02)]),
        "bg": np.array([bg_b - 0.28, bg_b - 0.10, bg_b]),
    }


_SCLERA = np.array([0.97, 0.97, 0.95])
_PUPIL = np.array([0.06, 0.05, 0.05])
_LIP = np.array([0.45, 0.10, 0.12])
_MOUTH_IN = np.array([0.10, 0.04, 0.05])
_BROW = np.array([0.16, 0.12, 0.10])
# fixed-tone fixtures behind the mobile features, so expression photometry
# has identity-independent contrast
_SOCKET = np.array([0.46, 0.44, 0.42])
_PLATE = np.array([0.52, 0.44, 0.40])
_EDGE = 0.6  # antialias edge width in canvas pixels


def _ellipse_cov(x, y, cx, cy, rx, ry):
    """Soft coverage of an axis-aligned ellipse; exactly zero beyond rim + edge."""
    rx = max(rx, 1e-6)
    ry = max(ry, 1e-6)
    f = np.sqrt(((x - cx) / rx) ** 2 + ((y - cy) / ry) ** 2)
    d = (f - 1.0) * min(rx, ry)
    return np.clip(0.5 - d / _EDGE, 0.0, 1.0)


def _paint(img, cov, color):
    img *= 1.0 - cov[..., None]
    img += cov[..., None] * color


def feature_centers(fp: FaceParams, canvas: int) -> dict:
    """World-space eye/mouth centers under fp's pose transform (analytic)."""
    g = _geometry(fp.identity, canvas)
    yaw, pitch, roll, tx, ty, scale = fp.pose
    shear = np.array([yaw * YAW_SHEAR * canvas, pitch * PITCH_SHEAR * canvas])
    cosr, sinr = math.cos(roll), math.sin(roll)
    rot = np.array([[cosr, -sinr], [sinr, cosr]])
    center = np.array([canvas / 2.0 + tx, canvas / 2.0 + ty])
    out = {}
    for name, local in (
        ("eye_left", np.array([-g["eye_dx"], g["eye_y"]])),
        ("eye_right", np.array([g["eye_dx"], g["eye_y"]])),
        ("mouth", np.array([0.0, g["mouth_y"]])),
    ):
        out[name] = center + scale * (rot @ (local + shear))
    return out


def render(fp: FaceParams, canvas: int = 64) -> np.ndarray:
    """Rasterize a face (CHW float32 in [-1, 1]) at 2x supersampling.

    The pose similarity transform (scale, roll, translation) applies to the
    whole face; yaw/pitch additionally shear the inner features relative to
    the head outline as a toy 3-D cue.
    """
    fp.validate(canvas)
    g = _geometry(fp.identity, canvas)
    eo_l, eo_r, m_open, m_wide, brow, pupil = fp.expression
    yaw, pitch, roll, tx, ty, scale = fp.pose

    ss = 2
    n = canvas * ss
    coords = (np.arange(n, dtype=np.float64) + 0.5) / ss
    px, py = np.meshgrid(coords, coords)

    # inverse similarity: world pixel -> face-local coordinates
    cosr, sinr = math.cos(roll), math.sin(roll)
    dx = px - (canvas / 2.0 + tx)
    dy = py - (canvas / 2.0 + ty)
    lx = (cosr * dx + sinr * dy) / scale
    ly = (-sinr * dx + cosr * dy) / scale
    # feature-space coordinates: features are sheared by yaw/pitch
    fx = lx - yaw * YAW_SHEAR * canvas
    fy = ly - pitch * PITCH_SHEAR * canvas

    img = np.empty((n, n, 3), dtype=np.float64)
    img[:] = g["bg"]

    # hair: enlarged head ellipse, visible as a cap above the face
    hair_cov = _ellipse_cov(lx, ly, 0.0, 0.0, g["head_rx"] * 1.10, g["head_ry"] * 1.10)
    hair_cov = hair_cov * np.clip((-ly - 0.25 * g["head_ry"]) / 2.0, 0.0, 1.0)
    _paint(img, hair_cov, g["hair"])

    # head ellipse with jaw narrowing on the lower half
    below = np.clip(ly / g["head_ry"], 0.0, 1.0)
    rx_eff = g["head_rx"] * (1.0 - g["jaw"] * below**2)
    fhead = np.sqrt((lx / rx_eff) ** 2 + (ly / g["head_ry"]) ** 2)
    head_cov = np.clip(0.5 - (fhead - 1.0) * min(g["head_rx"] * (1 - g["jaw"]), g["head_ry"]) / _EDGE, 0.0, 1.0)
    _paint(img, head_cov, g["skin"])

    # static eye sockets and mouth plate (identity-independent tones)
    for sx in (-1.0, 1.0):
        cov = _ellipse_cov(fx, fy, sx * g["eye_dx"], g["eye_y"] - 0.02 * canvas, 0.080 * canvas, 0.105 * canvas)
        _paint(img, cov, _SOCKET)
    plate = _ellipse_cov(fx, fy, 0.0, g["mouth_y"], 0.115 * canvas, 0.070 * canvas)
    _paint(img, plate, _PLATE)

    # brows: dark bars above the eyes, raised/lowered by brow_raise
    brow_y = g["eye_y"] - 0.075 * canvas - brow * 0.030 * canvas
    for sx in (-1.0, 1.0):
        cov = _ellipse_cov(fx, fy, sx * g["eye_dx"], brow_y, 0.048 * canvas, 0.012 * canvas)
        _paint(img, cov, _BROW)

    # eyes: eyelid aperture (absolute) scales with eye_open; pupil is clipped
    # by the aperture and travels an absolute distance with pupil_shift_x
    for sx, openness in ((-1.0, eo_l), (1.0, eo_r)):
        aperture = (0.06 + 0.94 * openness) * 0.046 * canvas
        sclera = _ellipse_cov(fx, fy, sx * g["eye_dx"], g["eye_y"], g["eye_r"], aperture)
        _paint(img, sclera, _SCLERA)
        pup = _ellipse_cov(
            fx,
            fy,
            sx * g["eye_dx"] + pupil * 0.030 * canvas,
            g["eye_y"],
            0.38 * g["eye_r"],
            0.38 * g["eye_r"],
        )
        _paint(img, pup * sclera, _PUPIL)

    # mouth: lip width carries identity; mouth_wide curves the band into a
    # smile and widens the dark slot, whose height tracks mouth_open
    mouth_rx = g["mouth_rx_base"]
    curve = m_wide * 0.024 * canvas * (((fx / mouth_rx) ** 2).clip(max=4.0) - 0.5)
    lip_cov = _ellipse_cov(fx, fy + curve, 0.0, g["mouth_y"], mouth_rx, 0.016 * canvas)
    _paint(img, lip_cov, _LIP)
    inner = _ellipse_cov(
        fx, fy, 0.0, g["mouth_y"], (0.040 + 0.020 * m_wide) * canvas, m_open * 0.052 * canvas
    )
    _paint(img, inner, _MOUTH_IN)

    # 2x2 box-filter downsample, then map [0, 1] -> [-1, 1]
    img = img.reshape(canvas, ss, canvas, ss, 3).mean(axis=(1, 3))
    img = np.transpose(img, (2, 0, 1)) * 2.0 - 1.0
    return np.ascontiguousarray(img, dtype=np.float32)


# ---------------------------------------------------------------------------
# samplers

_SUBJECT_STREAM, _MOTION_STREAM, _PROBE_STREAM = 101, 202, 303


def sample_subject(seed: int) -> np.ndarray:
    """Uniform identity vector in [-1, 1]^8, deterministic per seed."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([_SUBJECT_STREAM, int(seed)])))
    return rng.uniform(-1.0, 1.0, size=IDENTITY_DIM)


def _smooth_track(rng, num_frames: int, lo: float, hi: float) -> np.ndarray:
    """Low-pass-filtered random walk clipped to [lo, hi]."""
    mid, hr = (lo + hi) / 2.0, (hi - lo) / 2.0
    k = 9
    w = rng.standard_normal(num_frames + k - 1)
    kern = np.hanning(k + 2)[1:-1]
    kern /= kern.sum()
    smooth = np.convolve(w, kern, mode="valid")
    smooth = smooth / 0.35  # approximate unit variance after the low-pass
    offs = rng.uniform(-0.5, 0.5) * hr
    return np.clip(mid + offs + 0.55 * hr * smooth, lo, hi)


def sample_motion_track(seed: int, num_frames: int, canvas: int = 64) -> tuple[np.ndarray, np.ndarray]:
    """Per-frame (expression[q,6], pose[q,6]) arrays: smooth talking-style motion
    with Bernoulli blink and single-eye wink events of 2-4 frames."""
    if num_frames < 1:
        raise ArgumentError(f"num_frames must be >= 1, got {num_frames}")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([_MOTION_STREAM, int(seed)])))
    q = int(num_frames)
    tmax = SAMPLER_TRANSLATE_FRAC * canvas
    expr = np.stack(
        [
            _smooth_track(rng, q, 0.45, 1.0),   # eye_open_left
            _smooth_track(rng, q, 0.45, 1.0),   # eye_open_right
            _smooth_track(rng, q, 0.0, 1.0),    # mouth_open
            _smooth_track(rng, q, 0.0, 1.0),    # mouth_wide
            _smooth_track(rng, q, -1.0, 1.0),   # brow_raise
            _smooth_track(rng, q, -1.0, 1.0),   # pupil_shift_x
        ],
        axis=1,
    )
    pose = np.stack(
        [
            _smooth_track(rng, q, -YAW_MAX, YAW_MAX),
            _smooth_track(rng, q, -PITCH_MAX, PITCH_MAX),
            _smooth_track(rng, q, -ROLL_MAX, ROLL_MAX),
            _smooth_track(rng, q, -tmax, tmax),
            _smooth_track(rng, q, -tmax, tmax),
            _smooth_track(rng, q, *SAMPLER_SCALE_RANGE),
        ],
        axis=1,
    )
    # blink/wink overlays
    f = 0
    while f < q:
        r = rng.random()
        if r < 0.020:
            dur, eyes = int(rng.integers(2, 5)), (0, 1)
        elif r < 0.035:
            dur, eyes = int(rng.integers(2, 5)), (int(rng.integers(0, 2)),)
        else:
            f += 1
            continue
        for e in eyes:
            expr[f : f + dur, e] = 0.05
        f += dur
    return expr, pose


def make_face_params(identity: np.ndarray, expression: np.ndarray, pose: np.ndarray) -> FaceParams:
    return FaceParams(np.asarray(identity), np.asarray(expression), np.asarray(pose))


def sample_probe_params(seed: int, n: int, canvas: int = 64) -> list[FaceParams]:
    """IID uniform draws over the sampler bounds; used to fit evaluation probes."""
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([_PROBE_STREAM, int(seed)])))
    tmax = SAMPLER_TRANSLATE_FRAC * canvas
    out = []
    for _ in range(n):
        identity = rng.uniform(-1.0, 1.0, IDENTITY_DIM)
        expr = np.array(
            [
                rng.uniform(0.0, 1.0),
                rng.uniform(0.0, 1.0),
                rng.uniform(0.0, 1.0),
                rng.uniform(0.0, 1.0),
                rng.uniform(-1.0, 1.0),
                rng.uniform(-1.0, 1.0),
            ]
        )
        pose = np.array(
            [
                rng.uniform(-YAW_MAX, YAW_MAX),
                rng.uniform(-PITCH_MAX, PITCH_MAX),
                rng.uniform(-ROLL_MAX, ROLL_MAX),
                rng.uniform(-tmax, tmax),
                rng.uniform(-tmax, tmax),
                rng.uniform(*SAMPLER_SCALE_RANGE),
            ]
        )
        out.append(FaceParams(identity, expr, pose))
    return out


def reenact_oracle(
    identity_src: np.ndarray,
    motion_drv: tuple[np.ndarray, np.ndarray],
    leakage: float = 0.15,
    identity_drv: np.ndarray | None = None,
    canvas: int = 64,
) -> np.ndarray:
    """Analytic cross-identity reenactor: renders motion_drv with the source
    identity, contaminated by `leakage` of the driving identity."""
    global _oracle_calls
    if not 0.0 <= leakage <= 1.0:
        raise ArgumentError(f"leakage must lie in [0, 1], got {leakage}")
    _oracle_calls += 1
    identity = np.asarray(identity_src, dtype=np.float64)
    if leakage > 0.0:
        if identity_drv is None:
            raise ArgumentError("identity_drv required when leakage > 0")
        identity = (1.0 - leakage) * identity + leakage * np.asarray(identity_drv, dtype=np.float64)
    expr, pose = motion_drv
    return render(FaceParams(identity, np.asarray(expr), np.asarray(pose)), canvas)


def head_box(fp: FaceParams, canvas: int, enlarge: float = 1.2) -> tuple[float, float, float, float]:
    """Enlarged analytic bounding box (x0, y0, x1, y1) of the posed head ellipse,
    clipped to the canvas."""
    g = _geometry(fp.identity, canvas)
    yaw, pitch, roll, tx, ty, scale = fp.pose
    half_w = scale * math.hypot(g["head_rx"] * math.cos(roll), g["head_ry"] * math.sin(roll))
    half_h = scale * math.hypot(g["head_rx"] * math.sin(roll), g["head_ry"] * math.cos(roll))
    cx, cy = canvas / 2.0 + tx, canvas / 2.0 + ty
    x0 = max(0.0, cx - enlarge * half_w)
    y0 = max(0.0, cy - enlarge * half_h)
    x1 = min(float(canvas), cx + enlarge * half_w)
    y1 = min(float(canvas), cy + enlarge * half_h)
    return (x0, y0, x1, y1)


# ---------------------------------------------------------------------------
# corpus I/O


def quantize(img: np.ndarray) -> np.ndarray:
    """CHW float [-1, 1] -> HWC uint8."""
    u = np.clip(np.round((np.transpose(img, (1, 2, 0)) + 1.0) * 127.5), 0, 255)
    return u.astype(np.uint8)


def dequantize(u8: np.ndarray) -> np.ndarray:
    """HWC uint8 -> CHW float32 in [-1, 1]."""
    return np.ascontiguousarray(np.transpose(u8.astype(np.float32) / 127.5 - 1.0, (2, 0, 1)))


def write_png(img: np.ndarray, path: Path):
    Image.fromarray(quantize(img), mode="RGB").save(path, format="PNG")


def png_bytes(img: np.ndarray) -> bytes:
    buf = io.BytesIO()
    Image.fromarray(quantize(img), mode="RGB").save(buf, format="PNG")
    return buf.getvalue()


def read_png(path: Path) -> np.ndarray:
    with Image.open(path) as im:
        return dequantize(np.asarray(im.convert("RGB")))


@dataclass
class ClipSample:
    """One rendered clip with its ground-truth parameter track."""

    subject_id: int
    clip_id: int
    seed: int
    canvas_size: int
    frames: list = field(repr=False)
    params: list = field(repr=False)

    def __len__(self):
        return len(self.frames)


def _clip_dirname(subject_id: int, clip_id: int) -> str:
    return f"subj{subject_id:03d}/clip{clip_id:02d}"


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def generate_corpus(
    out_dir,
    num_subjects: int = 32,
    clips_per_subject: int = 4,
    frames_per_clip: int = 48,
    canvas: int = 64,
    seed: int = 7,
) -> dict:
    """Render and write the synthetic corpus; returns the manifest dict.

    The manifest records a content digest so regeneration can be verified
    bit-for-bit, plus the real-data reference configuration the toy corpus
    stands in for (550 subjects at 512x512).
    """
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise DataError(f"cannot create corpus directory {out}: {e}") from e
    subjects = []
    clip_digests = []
    for s in range(num_subjects):
        identity = sample_subject(seed * 100003 + s)
        clips = []
        for k in range(clips_per_subject):
            clip_seed = ((seed * 100003 + s) * 1009 + k) & 0x7FFFFFFF
            expr, pose = sample_motion_track(clip_seed, frames_per_clip, canvas)
            rel = _clip_dirname(s, k)
            cdir = out / rel
            cdir.mkdir(parents=True, exist_ok=True)
            h = hashlib.sha256()
            frames_meta = []
            for i in range(frames_per_clip):
                fp = FaceParams(identity, expr[i], pose[i])
                data = png_bytes(render(fp, canvas))
                try:
                    (cdir / f"frame_{i:04d}.png").write_bytes(data)
                except OSError as e:
                    raise DataError(f"cannot write frame under {cdir}: {e}") from e
                h.update(data)
                frames_meta.append(fp.to_dict())
            params_doc = _json_dumps(
                {
                    "schema_version": PARAMS_SCHEMA_VERSION,
                    "canvas": canvas,
                    "identity": [float(v) for v in identity],
                    "frames": frames_meta,
                }
            )
            (cdir / "params.json").write_text(params_doc)
            h.update(params_doc.encode())
            meta_doc = _json_dumps(
                {"subject_id": s, "clip_id": k, "seed": clip_seed, "canvas": canvas}
            )
            (cdir / "meta.json").write_text(meta_doc)
            clip_digest = h.hexdigest()
            clip_digests.append(clip_digest)
            clips.append({"path": rel, "frames": frames_per_clip, "digest": clip_digest})
        subjects.append({"subject_id": s, "clips": clips})
    digest = hashlib.sha256("".join(clip_digests).encode()).hexdigest()
    manifest = {
        "schema_version": PARAMS_SCHEMA_VERSION,
        "canvas": canvas,
        "seed": seed,
        "num_subjects": num_subjects,
        "clips_per_subject": clips_per_subject,
        "frames_per_clip": frames_per_clip,
        "reference_config": {"subjects": 550, "resolution": 512},
        "subjects": subjects,
        "digest": digest,
    }
    (out / "manifest.json").write_text(_json_dumps(manifest))
    return manifest


class Corpus:
    """Read access to an on-disk corpus; loads frames lazily with a small cache."""

    def __init__(self, root):
        self.root = Path(root)
        mpath = self.root / "manifest.json"
        if not mpath.exists():
            raise DataError(f"no manifest.json under corpus root {self.root}")
        self.manifest = json.loads(mpath.read_text())
        self.canvas = int(self.manifest["canvas"])
        self._cache: dict[tuple[int, int], ClipSample] = {}

    @property
    def digest(self) -> str:
        return self.manifest["digest"]

    @property
    def num_subjects(self) -> int:
        return int(self.manifest["num_subjects"])

    def clip_ids(self) -> list[tuple[int, int]]:
        out = []
        for s in self.manifest["subjects"]:
            for c in s["clips"]:
                out.append((int(s["subject_id"]), int(c["path"].rsplit("clip", 1)[1])))
        return out

    def load_clip(self, subject_id: int, clip_id: int) -> ClipSample:
        key = (subject_id, clip_id)
        if key in self._cache:
            return self._cache[key]
        cdir = self.root / _clip_dirname(subject_id, clip_id)
        if not cdir.exists():
            raise DataError(f"clip directory missing: {cdir}")
        pdoc = json.loads((cdir / "params.json").read_text())
        meta = json.loads((cdir / "meta.json").read_text())
        identity = np.array(pdoc["identity"])
        frames, params = [], []
        for i, fdict in enumerate(pdoc["frames"]):
            frames.append(read_png(cdir / f"frame_{i:04d}.png"))
            params.append(FaceParams.from_dict(fdict))
        clip = ClipSample(
            subject_id=subject_id,
            clip_id=clip_id,
            seed=int(meta["seed"]),
            canvas_size=int(pdoc["canvas"]),
            frames=frames,
            params=params,
        )
        assert np.allclose(identity, clip.params[0].identity)
        self._cache[key] = clip
        return clip

    def subject_identity(self, subject_id: int) -> np.ndarray:
        clips = self.manifest["subjects"][subject_id]["clips"]
        pdoc = json.loads((self.root / clips[0]["path"] / "params.json").read_text())
        return np.array(pdoc["identity"])
