#!/usr/bin/env python3
# Copyright 2026 The TYPIC Toolkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds data/mini_corpus and data/invalid_corpus, the small corpora used by
the unit, service and command-line tests.

mini_corpus holds 4 counterarguments with 20 hand-written comments in English
and Japanese, both diagnosis layers, judgments and a split. invalid_corpus is
a copy with a dangling counterargument, an unknown template and an incomplete
split.
"""

import json
import os
import shutil
def dumps(o): return json.dumps(o, sort_keys=True, separators=(",",":"), ensure_ascii=False)
def wl(path, recs):
    with open(path,"w",encoding="utf-8") as f:
        for r in recs: f.write(dumps(r)+"\n")
def wp(path, o):
    with open(path,"w",encoding="utf-8") as f: f.write(json.dumps(o, sort_keys=True, indent=2, ensure_ascii=False)+"\n")
root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
out = os.path.join(root, "data", "mini_corpus"); os.makedirs(out, exist_ok=True)
topics=[{"id":"HW","motion":"Homework should be abolished","points":[
  {"id":"HW1","text":"Abolishing homework gives students more free time"},
  {"id":"HW2","text":"Forcing students to do homework makes them passive in character"}]},
 {"id":"DP","motion":"Death penalty should be abolished","points":[
  {"id":"DP1","text":"Death penalty is an inhumane punishment"}]}]
docs={
 "CA-HW-1":("HW","expert",["Homework should not be abolished.","Without homework, students will just play games at home.","Homework builds study habits that last a lifetime.","Teachers can check what students understood through homework."]),
 "CA-HW-2":("HW","crowd",["Free time is not always used well.","Students who have no homework watch videos all night.","Homework teaches responsibility, so it helps students grow."]),
 "CA-DP-1":("DP","crowd",["The death penalty deters serious crime.","Victims' families need justice.","Life imprisonment costs taxpayers a lot of money."]),
 "CA-DP-2":("DP","expert",["宿題は子供の学習習慣を作る。","宿題がなければ子供はゲームばかりする。"]),
}
cas=[]; text_of={}
for cid,(t,k,sents) in docs.items():
    text=""; spans=[]
    for s in sents:
        if text: text+=" "
        spans.append([len(text),len(text)+len(s)]); text+=s
    text_of[cid]=text
    cas.append({"author_kind":k,"id":cid,"sentences":spans,"text":text,"topic_id":t})
def span(cid, phrase):
    t=text_of[cid]; b=t.index(phrase); return [b,b+len(phrase)]
comments=[
 ("M01","A1","CA-HW-1",[1],"Why would students only play games without homework?"),
 ("M02","A2","CA-HW-1",[1],"No evidence that students play games."),
 ("M03","A1","CA-HW-1",[2],"How does homework build habits that last?"),
 ("M04","A2","CA-HW-1",[3],"Teachers could check understanding with quizzes in class instead."),
 ("M05","A1","CA-HW-2",[1],"Watching videos all night is an exaggeration."),
 ("M06","A3","CA-HW-2",[2],"Why does responsibility come from homework? Also, is it more important than free time?"),
 ("M07","A3","CA-HW-2",[0],"Speak more slowly."),
 ("M08","A2","CA-DP-1",[0],"Is there any data showing deterrence of serious crime?"),
 ("M09","A4","CA-DP-1",[1],"What does justice mean here?"),
 ("M10","A4","CA-DP-1",[2],"Cost alone does not justify executions."),
 ("M11","A1","CA-DP-1",[0,1],"The speech does not address the point that the penalty is inhumane."),
 ("M12","A3","CA-DP-2",[1],"ゲームばかりするという根拠がない。"),
 ("M13","A2","CA-HW-1",[0],"The speech only states the conclusion."),
 ("M14","A1","CA-HW-1",[2],"Why is a lifetime habit more important than free time?"),
 ("M15","A3","CA-HW-2",[0],"What does using free time well mean?"),
 ("M16","A3","CA-HW-2",[1,2],"Watching videos all night is one student, not all students."),
 ("M17","A4","CA-DP-1",[2],"The government will say that money cannot justify killing."),
 ("M18","A2","CA-DP-1",[0],"Deterrence is not shown with any example."),
 ("M19","A4","CA-DP-2",[0],"宿題が学習習慣を作る理由がない。"),
 ("M20","A3","CA-DP-2",[0,1],"声が小さい。"),
]
wl(f"{out}/topics.jsonl", topics)
wl(f"{out}/counterarguments.jsonl", cas)
wl(f"{out}/comments.jsonl", [{"annotator_id":a,"counterargument_id":c,"id":i,"target":t,"text":x} for i,a,c,t,x in comments])
def E(cid,text): return {"text":text,"extractability":"Extractable","source":{"document":"counterargument","span":span(cid,text)}}
diag=[
 {"id":"TD01","comment_id":"M01","annotator_id":"T1","label":"CA1","fillers":{"x":E("CA-HW-1","Without homework"),"y":E("CA-HW-1","students will just play games at home")}},
 {"id":"TD02","comment_id":"M02","annotator_id":"T2","label":"CA1","fillers":{"x":{"text":"no homework"},"y":{"text":"playing games"}}},
 {"id":"TD03","comment_id":"M03","annotator_id":"T1","label":"CA2","fillers":{"x":E("CA-HW-1","Homework"),"y":E("CA-HW-1","study habits that last a lifetime")}},
 {"id":"TD04","comment_id":"M04","annotator_id":"T2","label":"GS2","fillers":{"x":{"text":"teachers could check understanding with quizzes","extractability":"NotExtractable"}}},
 {"id":"TD05","comment_id":"M05","annotator_id":"T1","label":"EX2","fillers":{"x":{"text":"watch videos","extractability":"ExtractableWithChanges"},"y":{"text":"all night"}}},
 {"id":"TD06","comment_id":"M06","annotator_id":"T2","label":"CA1","fillers":{"x":{"text":"homework"},"y":{"text":"responsibility"}}},
 {"id":"TD07","comment_id":"M06","annotator_id":"T2","label":"CMP1","fillers":{"x":{"text":"responsibility"},"y":{"text":"free time"}}},
 {"id":"TD08","comment_id":"M07","annotator_id":"T1","label":"NotApplicable"},
 {"id":"TD09","comment_id":"M08","annotator_id":"T1","label":"CA2","fillers":{"x":{"text":"the death penalty"},"y":{"text":"deters serious crime"}}},
 {"id":"TD10","comment_id":"M09","annotator_id":"T2","label":"CLR1","fillers":{"x":E("CA-DP-1","justice")}},
 {"id":"TD11","comment_id":"M10","annotator_id":"T1","label":"CLS1","fillers":{"x":{"text":"life imprisonment costs a lot"},"y":{"text":"a reason for executions"}}},
 {"id":"TD12","comment_id":"M11","annotator_id":"T2","label":"GR1","fillers":{"x":{"text":"Death penalty is an inhumane punishment","extractability":"Extractable","source":{"document":"original:DP1","span":[0,39]}}}},
 {"id":"TD13","comment_id":"M12","annotator_id":"T1","label":"CA1","fillers":{"x":E("CA-DP-2","宿題がなければ"),"y":E("CA-DP-2","子供はゲームばかりする")}},
 {"id":"TD14","comment_id":"M13","annotator_id":"T2","label":"LR1","fillers":{"x":{"text":"no reason"},"y":E("CA-HW-1","Homework should not be abolished")}},
 {"id":"TD15","comment_id":"M14","annotator_id":"T1","label":"CMP1","fillers":{"x":E("CA-HW-1","study habits"),"y":{"text":"free time"}}},
 {"id":"TD16","comment_id":"M15","annotator_id":"T2","label":"CLR1","fillers":{"x":E("CA-HW-2","Free time is not always used well")}},
 {"id":"TD17","comment_id":"M16","annotator_id":"T1","label":"CLR2","fillers":{"x":E("CA-HW-2","Students who have no homework watch videos all night")}},
 {"id":"TD18","comment_id":"M17","annotator_id":"T2","label":"GS2","fillers":{"x":{"text":"money cannot justify killing"}}},
 {"id":"TD19","comment_id":"M18","annotator_id":"T1","label":"EX1","fillers":{"x":E("CA-DP-1","deters serious crime")}},
 {"id":"TD20","comment_id":"M19","annotator_id":"T2","label":"CA1","fillers":{"x":E("CA-DP-2","宿題"),"y":E("CA-DP-2","子供の学習習慣を作る")}},
 {"id":"TD21","comment_id":"M20","annotator_id":"T1","label":"NotApplicable"},
]
overlap=[
 {"id":"TO01","comment_id":"M01","annotator_id":"T2","label":"CA1","fillers":{"x":{"text":"without homework"},"y":{"text":"play games at home"}}},
 {"id":"TO02","comment_id":"M03","annotator_id":"T2","label":"CA1","fillers":{"x":{"text":"homework"},"y":{"text":"study habits"}}},
 {"id":"TO03","comment_id":"M07","annotator_id":"T2","label":"NotApplicable"},
 {"id":"TO04","comment_id":"M09","annotator_id":"T1","label":"CLR1","fillers":{"x":{"text":"justice"}}},
 {"id":"TO05","comment_id":"M10","annotator_id":"T2","label":"CLS1","fillers":{"x":{"text":"cost"},"y":{"text":"justification for executions"}}},
]
votes={"TD01":[3,3,2],"TD02":[2,2,1],"TD03":[3,3,3],"TD04":[1,2,3],"TD05":[3,2,2],"TD06":[3,3,1],"TD07":[2,3,3],
       "TD09":[3,3,2],"TD10":[1,1,2],"TD11":[2,3,2],"TD12":[3,3,3],"TD13":[3,2,3],
       "TD14":[2,2,3],"TD15":[3,3,3],"TD16":[1,2,2],"TD17":[3,1,2],"TD18":[3,3,2],"TD19":[2,3,3],"TD20":[3,3,3]}
cmt={d["id"]:d["comment_id"] for d in diag}
judg=[{"comment_id":cmt[d],"diagnosis_id":d,"score":s,"worker_id":w} for d,v in votes.items() for w,s in zip(["W1","W2","W3"],v)]
wl(f"{out}/templated.jsonl", diag); wl(f"{out}/templated_overlap.jsonl", overlap); wl(f"{out}/judgments.jsonl", judg)
wp(f"{out}/split.json", {"dev":["M01","M02","M03","M06","M13","M14","M15"],"eval":["M04","M05","M07","M08","M09","M10","M11","M12","M16","M17","M18","M19","M20"]})
wl(f"{out}/slot_adjudication.jsonl", [
 {"item":"M01#0/x","ratings":{"T1":"a","T2":"a"}},{"item":"M01#0/y","ratings":{"T1":"b","T2":"b"}},
 {"item":"M09#0/x","ratings":{"T1":"c","T2":"c"}},{"item":"M10#0/x","ratings":{"T1":"d","T2":"e"}},{"item":"M10#0/y","ratings":{"T1":"f","T2":"f"}}])
man={"files":{"comments":"comments.jsonl","counterarguments":"counterarguments.jsonl","judgments":"judgments.jsonl","slot_adjudication":"slot_adjudication.jsonl","split":"split.json","templated":"templated.jsonl","templated_overlap":"templated_overlap.jsonl","topics":"topics.jsonl"},
     "name":"typic-mini","template_set":"../templates/typic_templates.json","template_set_version":"1.0","tokenizer":"unicode-word"}
wp(f"{out}/manifest.json", man)
bad = os.path.join(root, "data", "invalid_corpus")
if os.path.exists(bad): shutil.rmtree(bad)
shutil.copytree(out, bad)
with open(f"{bad}/comments.jsonl","a") as f:
    f.write(dumps({"annotator_id":"A1","counterargument_id":"CA-XX-9","id":"M99","target":[0],"text":"Dangling."})+"\n")
with open(f"{bad}/templated.jsonl","a") as f:
    f.write(dumps({"annotator_id":"T1","comment_id":"M02","id":"TD99","label":"CA9"})+"\n")
m=json.load(open(f"{bad}/manifest.json")); m["name"]="typic-invalid"; wp(f"{bad}/manifest.json", m)
