#!/usr/bin/env python3
# Copyright 2026 The Mindmap Authors.
# Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
"""Regenerates the desk-scale fixture corpus under data/fixture/.

The corpus is synthetic: topical clusters of words get noisy copies of a
cluster centroid as embeddings, pinyin comes from pypinyin, and the artist
graph links words across clusters the way an artist's private associations
would. Output is fully determined by SEED.

    pip install pypinyin
    python3 tools/make_fixture.py [out_dir]
"""

import math
import random
import sys
from pathlib import Path

from pypinyin import Style, pinyin

SEED = 20201017
DIM = 32
NOISE = 0.12
TARGET_WORDS = 2000
CLUSTER_SIZE = 20

# Hand-written clusters: (topic, words). The six landscape clusters double as
# painting-domain prototypes.
CLUSTERS = [
    ("medical", "医院 医生 护士 病人 药房 手术 诊所 病房 住院 药品 急诊 体检 治疗 康复 疫苗"),
    ("society", "监狱 囚犯 牢房 铁窗 看守 法庭 法官 审判 律师 罪犯 自由 判决"),
    ("nature", "天鹅 野天鹅 芦苇 候鸟 森林 白鹭 羽毛 飞翔 翅膀 树木 松鼠 花朵 树 书 数"),
    ("feelings", "疯狂 愤怒 喜悦 悲伤 孤独 梦想 思念 恐惧 快乐 忧郁 激情 温柔"),
    ("food", "米饭 面条 饺子 包子 豆腐 馒头 烤鸭 火锅 汤圆 月饼 茶叶 蛋糕"),
    ("sports", "足球 篮球 跑步 游泳 排球 网球 滑雪 拳击 赛跑 体操 乒乓 冠军"),
    ("clothes", "衣服 裙子 帽子 鞋子 围巾 外套 衬衫 手套 袜子 旗袍 领带 毛衣"),
    ("ai", "机器 算法 芯片 电脑 程序 数据 网络 模型 智能 代码 机器人 屏幕"),
    ("body", "眼睛 耳朵 鼻子 嘴巴 心脏 手指 头发 肩膀 血液 骨头 皮肤 呼吸"),
    ("stories", "童话 公主 王子 巨人 魔法 城堡 精灵 巫婆 神话 传说 寓言 宝藏"),
    ("religion", "寺院 和尚 佛像 经书 祈祷 教堂 香火 菩萨 信仰 天堂 修行 钟声"),
    ("occupations", "老师 农民 工人 厨师 画家 司机 警察 记者 歌手 医师 作家 渔夫"),
    ("city", "公园 广场 商店 地铁 公寓 超市 剧院 银行 车站 路灯 邮局 街角"),
    ("architecture", "房子 宫殿 高塔 庙宇 楼阁 亭子 城墙 屋顶 院落 牌楼"),
    ("mountain", "山峰 高山 峡谷 悬崖 山岭 山顶 岩石 山坡 山谷 山脉"),
    ("river", "河流 江水 溪流 瀑布 河岸 河道 江河 浪花 流水 小溪"),
    ("grassland", "草原 草地 牧场 田野 草坪 牛羊 麦田 原野 花园 青草"),
    ("road", "道路 街道 小路 公路 桥梁 小径 马路 隧道 路口 大道"),
    ("lake", "湖泊 池塘 湖水 水潭 湖畔 湖面 湖心 倒影 荷塘 水波"),
]

PROTOTYPES = {
    "architecture": ["房子", "宫殿", "楼阁"],
    "mountain": ["山峰", "高山", "山岭"],
    "river": ["河流", "江水", "溪流"],
    "grassland": ["草原", "草地", "牧场"],
    "road": ["道路", "街道", "小路"],
    "lake": ["湖泊", "池塘", "湖水"],
}

TOPICS = ["food", "occupations", "clothes", "ai", "body", "stories", "sports", "feelings", "religion",
          "medical", "nature", "city", "society", "landscape"]

POS_OVERRIDES = {
    "医院": "noun", "住院": "verb", "监狱": "noun", "疯狂": "adjective", "野天鹅": "noun",
    "想象": "verb", "治疗": "verb", "飞翔": "verb", "思念": "verb", "孤独": "adjective",
}

# Artist associations: parent -> children.
HAND_EDGES = [
    ("医院", "病人"), ("医院", "监狱"), ("监狱", "铁窗"), ("梦想", "城堡"), ("城堡", "牢房"),
    ("湖泊", "倒影"), ("天鹅", "公主"), ("火锅", "江湖"), ("眼睛", "湖水"), ("机器", "心脏"),
]

COMMON_CHARS = (
    "的一是不了人我在有他这为之大来以个中上们到说国和地也子时道出而要于就下得可你年生自会那后能对着事其里所去行过家"
    "十用发天如然作方成者多日都三小军二无同么经法当起与好看学进种将还分此心前面又定见只主没公从知使全已开常理民向"
    "月力美实本电高量长党得实家定深法表着水理化争现所二起政三好十战无农使性前等反体合斗路图把结第里正新开论之物从"
    "当两些还天资事队批如应形想制心样干都向变关点育重其思与间内去因件日利相由压员气业代全组数果期导平各基或月毛然"
    "问比展那它最及外没看治提五解系林者米群头意只明四道马认次文通但条较克又公孔领军流入接席位情运器并飞原油放立题"
    "质指建区验活众很教决特此常石强极土少已根共直团统式转别造切九你取西持总料连任志观调七么山程百报更见必真保热委"
    "手改管处己将修支识病象几先老光专什六型具示复安带每东增则完风回南广劳轮科北打积车计给节做务被整联步类集号列温"
    "装即毫知轴研单色坚据速防史拉世设达尔场织历花受求传口断况采精金界品判参层止边清至万确究书术状厂须离再目海交权"
    "且儿青才证低越际八试规斯近注办布门铁需走议县兵固除般引齿千胜细影济白格效置推空配刀叶率述今选养德话查差半敌始"
    "片施响收华觉备名红续均药标记难存测士身紧液派准斤角降维板许破述技消底床田势端感往神便贺村构照容非搞亚磨族火段"
)

LONG_WORDS = ["中华人民共和国国务院", "人工智能与艺术创作研究", "美术学院实验艺术学院", "自然语言处理技术研讨", "城市规划与建筑设计方案"]


def unit(v):
    n = math.sqrt(sum(x * x for x in v))
    return [x / n for x in v]


def gauss_vec(rng, sigma=1.0):
    return [rng.gauss(0.0, sigma) for _ in range(DIM)]


def syllables(word):
    out = []
    for (s,) in pinyin(word, style=Style.TONE3, heteronym=False, errors="ignore"):
        out.append(s.replace("ü", "v"))
    return out


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "fixture"
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)

    chars = []
    for c in COMMON_CHARS:
        if "一" <= c <= "鿿" and c not in chars:
            chars.append(c)

    clusters = []  # (topic, [words])
    seen = set()
    for topic, words in CLUSTERS:
        ws = [w for w in words.split() if w not in seen]
        seen.update(ws)
        clusters.append((topic if topic in TOPICS else "landscape", ws))
    seen.add("想象")
    seen.add("江湖")

    synthetic_topics = [t for t in TOPICS if t != "landscape"]
    total = sum(len(ws) for _, ws in clusters) + 2
    while total < TARGET_WORDS:
        ws = []
        while len(ws) < CLUSTER_SIZE and total < TARGET_WORDS:
            n = 2 if rng.random() < 0.85 else 3
            w = "".join(rng.choice(chars) for _ in range(n))
            if w in seen:
                continue
            seen.add(w)
            ws.append(w)
            total += 1
        clusters.append((synthetic_topics[len(clusters) % len(synthetic_topics)], ws))

    centroids = [unit(gauss_vec(rng)) for _ in clusters]
    vectors = {}
    topic_of = {}
    for (topic, ws), c in zip(clusters, centroids):
        for w in ws:
            vectors[w] = [a + b for a, b in zip(c, gauss_vec(rng, NOISE))]
            topic_of[w] = topic
    feelings = centroids[[t for t, _ in clusters].index("feelings")]
    lake = centroids[[ws for _, ws in clusters].index(next(ws for _, ws in clusters if "湖泊" in ws))]
    vectors["想象"] = [0.55 * a + 0.85 * b + n for a, b, n in zip(feelings, lake, gauss_vec(rng, NOISE))]
    topic_of["想象"] = "feelings"
    river = centroids[[ws for _, ws in clusters].index(next(ws for _, ws in clusters if "河流" in ws))]
    vectors["江湖"] = [a + n for a, n in zip(river, gauss_vec(rng, NOISE))]
    topic_of["江湖"] = "stories"

    words = list(vectors)
    rng.shuffle(words)

    with open(out_dir / "embeddings.txt", "w", encoding="utf-8") as f:
        long_vectors = {w: gauss_vec(rng) for w in LONG_WORDS}
        f.write(f"{len(words) + len(LONG_WORDS)} {DIM}\n")
        for i, w in enumerate(words):
            f.write(w + " " + " ".join(f"{x:.5f}" for x in vectors[w]) + "\n")
            if i % 400 == 0 and long_vectors:
                lw, lv = long_vectors.popitem()
                f.write(lw + " " + " ".join(f"{x:.5f}" for x in lv) + "\n")
        for lw, lv in long_vectors.items():
            f.write(lw + " " + " ".join(f"{x:.5f}" for x in lv) + "\n")

    ordered = sorted(words)
    with open(out_dir / "phonetic.tsv", "w", encoding="utf-8") as f:
        for w in ordered:
            syl = syllables(w)
            if syl:
                f.write(f"{w}\t{' '.join(syl)}\n")

    with open(out_dir / "pos.tsv", "w", encoding="utf-8") as f:
        for w in ordered:
            if w in POS_OVERRIDES:
                f.write(f"{w}\t{POS_OVERRIDES[w]}\n")
            elif rng.random() < 0.9:
                r = rng.random()
                f.write(f"{w}\t{'noun' if r < 0.6 else 'verb' if r < 0.85 else 'adjective'}\n")

    with open(out_dir / "domains.tsv", "w", encoding="utf-8") as f:
        for w in ordered:
            if w in POS_OVERRIDES or rng.random() < 0.9:
                f.write(f"{w}\t{topic_of[w]}\n")

    with open(out_dir / "prototypes.tsv", "w", encoding="utf-8") as f:
        f.write("# painting domain<TAB>prototype word\n")
        for domain, ws in PROTOTYPES.items():
            for w in ws:
                f.write(f"{domain}\t{w}\n")

    # Artist graph: hand associations plus random cross-cluster trees of
    # height <= 2 (every vertex has one parent at most).
    parent = {}
    children = {}
    for p, c in HAND_EDGES:
        parent[c] = p
        children.setdefault(p, []).append(c)
    cluster_of = {w: i for i, (_, ws) in enumerate(clusters) for w in ws}
    cluster_of["想象"] = -1
    cluster_of["江湖"] = -2
    used = set(parent) | set(children)
    free = [w for w in ordered if w not in used]
    rng.shuffle(free)
    depth = {}
    for w in used:
        d, x = 0, w
        while x in parent:
            x = parent[x]
            d += 1
        depth[w] = d
    roots_made = 0
    while roots_made < 65 and free:
        root = free.pop()
        depth[root] = 0
        roots_made += 1
        for _ in range(rng.randint(2, 3)):
            if not free:
                break
            child = free.pop()
            if cluster_of.get(child) == cluster_of.get(root):
                continue
            parent[child] = root
            children.setdefault(root, []).append(child)
            depth[child] = 1
            if rng.random() < 0.5 and free:
                g = free.pop()
                if cluster_of.get(g) in (cluster_of.get(child), cluster_of.get(root)):
                    continue
                parent[g] = child
                children.setdefault(child, []).append(g)
                depth[g] = 2
    isolated = free[:6]
    with open(out_dir / "artist_graph.tsv", "w", encoding="utf-8") as f:
        f.write("# parent<TAB>child; single-column lines declare isolated vertices\n")
        for p, c in HAND_EDGES:
            f.write(f"{p}\t{c}\n")
        hand = set(HAND_EDGES)
        for p in sorted(children):
            for c in children[p]:
                if (p, c) not in hand:
                    f.write(f"{p}\t{c}\n")
        for w in isolated:
            f.write(f"{w}\n")

    # Report seeds: graph vertices with at least one relation.
    linked = sorted(set(parent) | set(children))
    rng.shuffle(linked)
    seeds = [w for w in linked if w in vectors][:120]
    for must in ("医院", "野天鹅", "想象"):
        if must not in seeds:
            seeds[-1 - ("医院", "野天鹅", "想象").index(must)] = must
    with open(out_dir / "seeds.txt", "w", encoding="utf-8") as f:
        for w in seeds:
            f.write(w + "\n")

    print(f"{len(words)} words, {len(clusters)} clusters, graph {len(set(parent) | set(children)) + len(isolated)} "
          f"vertices / {len(parent)} edges, {len(seeds)} seeds -> {out_dir}")


if __name__ == "__main__":
    main()
