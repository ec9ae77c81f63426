#!/usr/bin/env python3
# Copyright (c) 2026 The Frame Scraper Authors. All Rights Reserved.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Captures the reference frames, calibration points and small live runs under
data/ from the Arcade Learning Environment (pip install ale-py).

Sample points are chosen by inspecting pixels of real frames: for each
character the pixel of its sprite nearest the sprite's centre is recorded
together with the frame it came from. The C++ calibration tests recompute the
profile colour ranges from these points.
"""
import argparse
import csv
import json
import os

import numpy as np
from PIL import Image
from scipy import ndimage
from ale_py import ALEInterface, LoggerMode, roms

ALEInterface.setLoggerMode(LoggerMode.Error)

MSPACMAN_SPRITES = {
    "pacman": (210, 164, 74),
    "ghost1": (200, 72, 72),
    "ghost2": (198, 89, 179),
    "ghost3": (84, 184, 153),
    "ghost4": (180, 122, 48),
}
MSPACMAN_FRIGHTENED = (66, 114, 194)
MSPACMAN_WALL = (228, 111, 111)
PONG_SPRITES = {
    "paddle_left": (213, 130, 74),
    "paddle_right": (92, 186, 92),
    "ball": (236, 236, 236),
}
PONG_BACKGROUND = (144, 72, 17)
PONG_PLAYFIELD_ROWS = (34, 193)


def make_ale(game, seed=0):
    ale = ALEInterface()
    ale.setInt("random_seed", seed)
    ale.setFloat("repeat_action_probability", 0.0)
    ale.loadROM(roms.get_rom_path(game))
    return ale


def mask_of(frame, color, rows=None):
    m = np.all(frame == np.array(color, dtype=np.uint8), axis=2)
    if rows is not None:
        m[: rows[0]] = False
        m[rows[1] + 1:] = False
    return m


def sample_point(frame, color, rows=None):
    """Pixel of the largest blob of `color` closest to that blob's centre."""
    m = mask_of(frame, color, rows)
    lab, n = ndimage.label(m, structure=np.ones((3, 3)))
    if n == 0:
        return None
    sizes = ndimage.sum(m, lab, range(1, n + 1))
    best = int(np.argmax(sizes)) + 1
    ys, xs = np.nonzero(lab == best)
    cx, cy = xs.mean(), ys.mean()
    i = int(np.argmin((xs - cx) ** 2 + (ys - cy) ** 2))
    return int(xs[i]), int(ys[i])


def save_png(frame, path):
    Image.fromarray(frame, "RGB").save(path, optimize=True)


def capture_mspacman(out, tolerance):
    ale = make_ale("ms_pacman")
    rng = np.random.default_rng(1)
    moves = ale.getMinimalActionSet()[1:5]
    points, frames_needed = [], dict(MSPACMAN_SPRITES)
    ref_frames = []
    pills = []
    action = moves[0]
    t = 0
    # Ghosts flicker on alternating frames; walk until every sprite colour has
    # been sampled at least once.
    while frames_needed and t < 5000:
        ale.act(action)
        t += 1
        if t < 60 or t % 7:
            continue
        frame = ale.getScreenRGB()
        got = {n: sample_point(frame, c, (0, 171)) for n, c in frames_needed.items()}
        got = {n: p for n, p in got.items() if p is not None}
        if len(got) >= 2 or (got and len(frames_needed) <= 2):
            name = "ms_pacman_%02d.png" % len(ref_frames)
            save_png(frame, os.path.join(out, "reference_frames", name))
            ref_frames.append(name)
            for n, p in got.items():
                points.append({"character": n, "frame": name, "x": p[0], "y": p[1], "tolerance": tolerance})
                del frames_needed[n]
            wall = mask_of(frame, MSPACMAN_WALL)
            lab, _ = ndimage.label(wall, structure=np.ones((3, 3)))
            for i, sl in enumerate(ndimage.find_objects(lab), start=1):
                if int((lab[sl] == i).sum()) != 28:  # 4x7 power pill
                    continue
                ys, xs = np.nonzero(lab == i)
                x, y = float(xs.mean()), float(ys.mean())
                # Pills blink, so each frame shows a subset; keep first sighting.
                if all(abs(x - q["x"]) + abs(y - q["y"]) > 8 for q in pills):
                    pills.append({"frame": name, "x": x, "y": y})
    pills.sort(key=lambda q: (q["y"] > 90, q["x"]))
    # Frightened ghosts: wander until a +50 reward, then sample a few steps later.
    action = moves[0]
    while True:
        if rng.random() < 0.03:
            action = moves[rng.integers(4)]
        r = ale.act(action)
        if ale.game_over():
            ale.reset_game()
        if r == 50:
            for _ in range(6):
                ale.act(action)
            frame = ale.getScreenRGB()
            p = sample_point(frame, MSPACMAN_FRIGHTENED, (0, 171))
            if p is None:
                continue
            name = "ms_pacman_frightened.png"
            save_png(frame, os.path.join(out, "reference_frames", name))
            points.append({"character": "frightened", "frame": name, "x": p[0], "y": p[1], "tolerance": tolerance})
            break
    wall_frame = ref_frames[0]
    wy, wx = np.nonzero(mask_of(np.array(Image.open(os.path.join(out, "reference_frames", wall_frame))), MSPACMAN_WALL))
    walls = [{"frame": wall_frame, "x": int(wx[i]), "y": int(wy[i])} for i in range(0, len(wx), max(1, len(wx) // 8))]
    return {"game": "ms_pacman", "points": points, "wall_points": walls, "power_pills": pills}


def capture_pong(out, tolerance):
    ale = make_ale("pong")
    for _ in range(120):
        ale.act(0)
    frame = ale.getScreenRGB()
    name = "pong_00.png"
    save_png(frame, os.path.join(out, "reference_frames", name))
    points = []
    for n, c in PONG_SPRITES.items():
        p = sample_point(frame, c, PONG_PLAYFIELD_ROWS)
        points.append({"character": n, "frame": name, "x": p[0], "y": p[1], "tolerance": tolerance})
    ys, xs = np.nonzero(mask_of(frame, PONG_BACKGROUND))
    walls = [{"frame": name, "x": int(xs[i]), "y": int(ys[i])} for i in range(0, len(xs), len(xs) // 8)]
    return {"game": "pong", "points": points, "wall_points": walls, "power_pills": []}


def capture_run(game, out_dir, steps, policy, seed=0, frameskip=4):
    """Writes a raw run (manifest.json, steps.csv, frames/) for a single env."""
    ale = make_ale(game, seed)
    actions = ale.getMinimalActionSet()
    names = [str(a).split(".")[-1] for a in actions]
    os.makedirs(os.path.join(out_dir, "frames"), exist_ok=True)
    manifest = {
        "game": game, "num_envs": 1, "algorithm": policy, "frame_dir": "frames",
        "frame_width": 160, "frame_height": 210, "created": "2026-10-14T00:00:00Z", "format_version": 1,
    }
    with open(os.path.join(out_dir, "manifest.json"), "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")
    rng = np.random.default_rng(seed)
    with open(os.path.join(out_dir, "steps.csv"), "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["step", "env", "action", "action_name", "reward", "lives", "done", "frame"])
        for step in range(steps):
            a = 0 if policy == "noop" else int(rng.integers(len(actions)))
            reward = sum(ale.act(actions[a]) for _ in range(frameskip))
            done = ale.game_over()
            rel = "frames/e00_s%08d.png" % step
            save_png(ale.getScreenRGB(), os.path.join(out_dir, rel))
            lives = ale.lives() if game == "ms_pacman" else 0
            w.writerow([step, 0, a, names[a], "%g" % reward, lives, int(done), rel])
            if done:
                ale.reset_game()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("--tolerance", type=int, default=6)
    args = ap.parse_args()
    os.makedirs(os.path.join(args.data, "reference_frames"), exist_ok=True)
    os.makedirs(os.path.join(args.data, "calibration"), exist_ok=True)
    for game, fn in (("ms_pacman", capture_mspacman), ("pong", capture_pong)):
        cal = fn(args.data, args.tolerance)
        with open(os.path.join(args.data, "calibration", game + ".json"), "w") as f:
            json.dump(cal, f, indent=2)
            f.write("\n")
    capture_run("pong", os.path.join(args.data, "reference_runs", "pong_noop"), 200, "noop")
    capture_run("ms_pacman", os.path.join(args.data, "reference_runs", "ms_pacman_random"), 240, "random")


if __name__ == "__main__":
    main()
