#pragma once
// Hand-written structure constants used as independent inputs.

#include <string>

/// osp(1|2) on h, e, f, x, y:
/// [h,e]=2e [h,f]=-2f [e,f]=h [h,x]=x [h,y]=-y [e,y]=-x [f,x]=-y [x,x]=2e [y,y]=-2f [x,y]=h
/// with (e,f)=1, (h,h)=2, (x,y)=2.
inline std::string osp12_table() {
  return R"({"name":"osp(1|2) by hand","dim":5,"parity":[0,0,0,1,1],
  "labels":["h","e","f","x","y"],
  "brackets":[
    {"i":0,"j":1,"terms":[{"k":1,"num":"2","den":"1"}]},
    {"i":1,"j":0,"terms":[{"k":1,"num":"-2","den":"1"}]},
    {"i":0,"j":2,"terms":[{"k":2,"num":"-2","den":"1"}]},
    {"i":2,"j":0,"terms":[{"k":2,"num":"2","den":"1"}]},
    {"i":1,"j":2,"terms":[{"k":0,"num":"1","den":"1"}]},
    {"i":2,"j":1,"terms":[{"k":0,"num":"-1","den":"1"}]},
    {"i":0,"j":3,"terms":[{"k":3,"num":"1","den":"1"}]},
    {"i":3,"j":0,"terms":[{"k":3,"num":"-1","den":"1"}]},
    {"i":0,"j":4,"terms":[{"k":4,"num":"-1","den":"1"}]},
    {"i":4,"j":0,"terms":[{"k":4,"num":"1","den":"1"}]},
    {"i":1,"j":4,"terms":[{"k":3,"num":"-1","den":"1"}]},
    {"i":4,"j":1,"terms":[{"k":3,"num":"1","den":"1"}]},
    {"i":2,"j":3,"terms":[{"k":4,"num":"-1","den":"1"}]},
    {"i":3,"j":2,"terms":[{"k":4,"num":"1","den":"1"}]},
    {"i":3,"j":3,"terms":[{"k":1,"num":"2","den":"1"}]},
    {"i":4,"j":4,"terms":[{"k":2,"num":"-2","den":"1"}]},
    {"i":3,"j":4,"terms":[{"k":0,"num":"1","den":"1"}]},
    {"i":4,"j":3,"terms":[{"k":0,"num":"1","den":"1"}]}
  ],
  "form":[
    {"i":1,"j":2,"num":"1","den":"1"},{"i":2,"j":1,"num":"1","den":"1"},
    {"i":0,"j":0,"num":"2","den":"1"},
    {"i":3,"j":4,"num":"2","den":"1"},{"i":4,"j":3,"num":"-2","den":"1"}
  ]})";
}
